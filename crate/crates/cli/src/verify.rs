//! Verification suites: every invariant the library promises, checked on
//! sampled and gridded states. Each check reports its worst deviation and
//! the first counterexample it met.

use std::str::FromStr;

use qrel_core::closed_form;
use qrel_core::linalg::eig_hermitian;
use qrel_core::relations::{in_nonlocal_band, label_contradicts, pure_state_residual, RegionLabel};
use qrel_core::xxz::{block_hamiltonian, ground_vector};
use qrel_core::{
    apply_pf_each_qubit, boundary_d2, classify_region, coherence_degree_pair, horodecki_state,
    identity_defect, min_coherence_state, phi_plus, profile, pure_state_relations, reduce_pair,
    rg_step, w_state, xxz_pair_profile, y_factor, BoundaryKind, ComplexMatrix, GroundVariant,
    PairSelector, Profile64, State64, WParams64, XxzParams64,
};
use serde::Serialize;
use serde_json::{json, Value};

use crate::output::num;
use crate::sampling;
use crate::{CliError, CliResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Boundaries,
    Channels,
    Xxz,
    All,
}

impl FromStr for Suite {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        match s {
            "identities" => Ok(Suite::Identities),
            "boundaries" => Ok(Suite::Boundaries),
            "channels" => Ok(Suite::Channels),
            "xxz" => Ok(Suite::Xxz),
            "all" => Ok(Suite::All),
            _ => Err(CliError::Usage(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    /// W samples for the ensemble checks; channel checks use a tenth.
    pub samples: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub counterexample: Option<String>,
}

/// Running worst-case deviation plus the first failing case.
struct Tally {
    worst: f64,
    failures: usize,
    seen: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            worst: 0.0,
            failures: 0,
            seen: 0,
            first: None,
        }
    }

    fn dev(&mut self, dev: f64, tol: f64, what: impl FnOnce() -> String) {
        self.seen += 1;
        // NaN counts as a failure
        if !(dev <= self.worst) {
            self.worst = dev;
        }
        if !(dev <= tol) {
            self.fail(what);
        }
    }

    fn ok(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.seen += 1;
        if !ok {
            self.fail(what);
        }
    }

    fn fail(&mut self, what: impl FnOnce() -> String) {
        self.failures += 1;
        if self.first.is_none() {
            self.first = Some(what());
        }
    }

    fn check(self, suite: &'static str, name: &'static str, detail: String) -> Check {
        let detail = if self.failures > 0 {
            format!("{detail}; {} of {} cases fail", self.failures, self.seen)
        } else {
            format!("{detail}; {} cases", self.seen)
        };
        Check {
            suite,
            name,
            passed: self.failures == 0,
            detail,
            counterexample: self.first,
        }
    }
}

fn describe_w(w: &WParams64, pair: PairSelector, p: f64, pr: &Profile64) -> String {
    format!(
        "alpha={} beta={} gamma={} pair={} p={} C={} D2={} N={} P={}",
        num(w.alpha),
        num(w.beta),
        num(w.gamma),
        pair,
        num(p),
        num(pr.concurrence),
        num(pr.d2),
        num(pr.n),
        num(pr.purity)
    )
}

struct WSample {
    w: WParams64,
    pair: PairSelector,
    pr: Profile64,
}

fn w_samples(cfg: &VerifyConfig, p: f64) -> CliResult<Vec<WSample>> {
    let mut rng = sampling::rng(cfg.seed);
    let mut out = Vec::with_capacity(cfg.samples * 3);
    for _ in 0..cfg.samples {
        let w = sampling::w_params(&mut rng);
        let rho = if p == 0.0 {
            w_state(&w)
        } else {
            apply_pf_each_qubit(&w_state(&w), p)?
        };
        for pair in PairSelector::ALL {
            out.push(WSample {
                w,
                pair,
                pr: profile(&reduce_pair(&rho, pair)?)?,
            });
        }
    }
    Ok(out)
}

const ID_TOL: f64 = 1e-10;

pub fn identities(cfg: &VerifyConfig) -> CliResult<Vec<Check>> {
    const S: &str = "identities";
    let samples = w_samples(cfg, 0.0)?;
    let mut purity = Tally::new();
    let mut horodecki_bound = Tally::new();
    for s in &samples {
        purity.dev(identity_defect(&s.pr).abs(), ID_TOL, || {
            describe_w(&s.w, s.pair, 0.0, &s.pr)
        });
        horodecki_bound.dev(s.pr.m - 2.0, ID_TOL, || {
            describe_w(&s.w, s.pair, 0.0, &s.pr)
        });
    }
    let purity_worst = purity.worst;

    let mut pure = Tally::new();
    for i in 0..=1000 {
        let c = i as f64 / 1000.0;
        let (n, d2) = pure_state_relations(c)?;
        pure.dev(pure_state_residual(n, d2).abs(), 1e-12, || {
            format!("C={}", num(c))
        });
    }

    // a Werner-like mixture breaks the identity: it is a W-family property
    let mix = &phi_plus::<f64>().matrix().scale(0.8) + &ComplexMatrix::identity(4).scale(0.05);
    let werner = identity_defect(&profile(&State64::new(mix)?)?);
    let mut scope = Tally::new();
    scope.ok(werner < 0.0, || {
        format!("defect {} on 0.8 Bell + 0.2 I/4", num(werner))
    });

    Ok(vec![
        purity.check(
            S,
            "purity identity D2 + C^2 = P on W pairs",
            format!("max |D2 + C^2 - P| = {purity_worst:e}"),
        ),
        horodecki_bound.check(
            S,
            "Horodecki bound M <= 2 on W pairs",
            "M - 2 <= 1e-10".into(),
        ),
        pure.check(
            S,
            "pure-pair relations N(C), D2(C)",
            "D2 + 2((N+2)/(2 sqrt 2))^2 = 2 within 1e-12".into(),
        ),
        scope.check(
            S,
            "identity is family-specific",
            format!("Werner-like defect = {}", num(werner)),
        ),
    ])
}

pub fn boundaries(cfg: &VerifyConfig) -> CliResult<Vec<Check>> {
    const S: &str = "boundaries";
    let mut checks = Vec::new();

    let mut collapse = Tally::new();
    for i in 0..1000 {
        let c = i as f64 / 999.0;
        for kind in BoundaryKind::ALL.into_iter().filter(|k| k.uses_y()) {
            let a = boundary_d2(kind, c, 1.0)?;
            let b = boundary_d2(kind.noiseless(), c, 1.0)?;
            collapse.ok(a == b, || {
                format!("{kind} at C={}: {} vs {}", num(c), num(a), num(b))
            });
        }
    }
    checks.push(collapse.check(
        S,
        "PF curves collapse at Y = 1",
        "exact equality on a 1000-point grid".into(),
    ));

    let noiseless = w_samples(cfg, 0.0)?;
    let settings = [
        (0.0, "nonlocal W pairs inside the band (noiseless)"),
        (0.05, "nonlocal W pairs inside the band (p = 0.05)"),
        (0.15, "nonlocal W pairs inside the band (p = 0.15)"),
        (0.25, "nonlocal W pairs inside the band (p = 0.25)"),
    ];
    for (p, name) in settings {
        let owned;
        let samples = if p == 0.0 {
            &noiseless
        } else {
            owned = w_samples(cfg, p)?;
            &owned
        };
        let y = y_factor(p)?;
        let mut bracket = Tally::new();
        for s in samples.iter().filter(|s| s.pr.is_bell_nonlocal()) {
            let inside = in_nonlocal_band(s.pr.concurrence, s.pr.d2, y, ID_TOL)?;
            bracket.ok(inside, || describe_w(&s.w, s.pair, p, &s.pr));
        }
        checks.push(bracket.check(
            S,
            name,
            format!("lower curve < D2 <= upper curve + 1e-10, Y = {}", num(y)),
        ));
    }

    let mut horo = Tally::new();
    for i in 0..1000 {
        let eps = i as f64 / 999.0;
        let pr = profile(&horodecki_state(eps)?)?;
        horo.dev(
            (pr.d2 - (1.0 - pr.concurrence).powi(2)).abs(),
            1e-12,
            || format!("eps={}", num(eps)),
        );
        let predicted = 2.0 * (2.0 * eps * eps).sqrt() - 2.0 > 0.0
            || 2.0 * (1.0 + eps * (5.0 * eps - 4.0)).sqrt() - 2.0 > 0.0;
        horo.ok(predicted == (pr.n > 0.0), || {
            format!("eps={} N={}", num(eps), num(pr.n))
        });
    }
    checks.push(horo.check(
        S,
        "Horodecki states on D2 = (1 - C)^2",
        "1000-point grid, 1e-12".into(),
    ));

    let floor = |c: f64| {
        if c >= 0.5 {
            (1.0 - c).powi(2)
        } else {
            0.5 - c * c
        }
    };
    let mut blbs = Tally::new();
    for s in noiseless.iter().filter(|s| !s.pr.is_bell_nonlocal()) {
        blbs.dev(floor(s.pr.concurrence) - s.pr.d2, ID_TOL, || {
            describe_w(&s.w, s.pair, 0.0, &s.pr)
        });
    }
    for i in 0..=1000 {
        let eps = i as f64 / 1000.0;
        let pr = profile(&horodecki_state(eps)?)?;
        if !pr.is_bell_nonlocal() {
            blbs.dev(floor(pr.concurrence) - pr.d2, ID_TOL, || {
                format!("horodecki eps={}", num(eps))
            });
        }
        let a = 0.5 * eps;
        let pr = profile(&min_coherence_state(a, 1.0)?)?;
        blbs.dev(floor(pr.concurrence) - pr.d2, ID_TOL, || {
            format!("min-coh a={}", num(a))
        });
    }
    checks.push(blbs.check(
        S,
        "Bell-local floor",
        "D2 >= (1-C)^2 for C >= 1/2, D2 >= 1/2 - C^2 below".into(),
    ));

    let mut table = Tally::new();
    for (c, d2, want) in [
        (0.3, 0.90, RegionLabel::BnbsOnly),
        (0.3, 0.50, RegionLabel::BlbsOnly),
        (0.9, 0.10, RegionLabel::BnbsOnly),
    ] {
        let got = classify_region(c, d2);
        table.ok(got == want, || {
            format!("C={c} D2={d2}: {got}, expected {want}")
        });
    }
    checks.push(table.check(
        S,
        "classifier worked points",
        "three reference points".into(),
    ));

    let mut consistent = Tally::new();
    for s in &noiseless {
        let label = classify_region(s.pr.concurrence, s.pr.d2);
        consistent.ok(!label_contradicts(label, &s.pr), || {
            format!("{label} for {}", describe_w(&s.w, s.pair, 0.0, &s.pr))
        });
    }
    checks.push(consistent.check(
        S,
        "classifier labels agree with measured N",
        "W pairs".into(),
    ));
    Ok(checks)
}

pub fn channels(cfg: &VerifyConfig) -> CliResult<Vec<Check>> {
    const S: &str = "channels";
    let n = (cfg.samples / 10).max(1);
    let mut rng = sampling::rng(cfg.seed ^ 0x5046);
    let mut trace = Tally::new();
    let mut immune = Tally::new();
    let mut defect = Tally::new();
    let mut closed = Tally::new();
    let mut largest_defect = 0.0f64;
    for _ in 0..n {
        let w = sampling::w_params(&mut rng);
        let p: f64 = rand::Rng::gen(&mut rng);
        let y = y_factor(p)?;
        let before = w_state(&w);
        let after = apply_pf_each_qubit(&before, p)?;
        let who = || {
            format!(
                "alpha={} beta={} gamma={} p={}",
                num(w.alpha),
                num(w.beta),
                num(w.gamma),
                num(p)
            )
        };
        trace.dev((after.matrix().trace().re - 1.0).abs(), 1e-12, who);
        for pair in PairSelector::ALL {
            let r0 = reduce_pair(&before, pair)?;
            let r1 = reduce_pair(&after, pair)?;
            let d0 = coherence_degree_pair(&r0)?;
            let d1 = coherence_degree_pair(&r1)?;
            immune.dev((d0 - d1).abs(), 1e-12, who);
            let pr = profile(&r1)?;
            let got = identity_defect(&pr);
            largest_defect = largest_defect.max(-got);
            defect.dev(
                (got - closed_form::w_pair_defect(&w, pair, y)).abs(),
                ID_TOL,
                || describe_w(&w, pair, p, &pr),
            );
            let want = closed_form::w_pair(&w, pair, y);
            let dev = [
                pr.d2 - want.d2,
                pr.concurrence - want.concurrence,
                pr.n - want.n,
                pr.purity - want.purity,
            ]
            .into_iter()
            .fold(0.0f64, |m, x| m.max(x.abs()));
            closed.dev(dev, ID_TOL, || describe_w(&w, pair, p, &pr));
        }
    }
    Ok(vec![
        trace.check(S, "trace preserved", "|Tr - 1| <= 1e-12".into()),
        immune.check(S, "coherence immune to dephasing", "|D2(after) - D2(before)| <= 1e-12".into()),
        defect.check(
            S,
            "dephased defect D2 + C^2 - P = 2su(Y^2 - 1)",
            format!(
                "within 1e-10; D2 + C^2 = P holds only at Y = 1 or su = 0 (largest observed gap {})",
                num(largest_defect)
            ),
        ),
        closed.check(S, "dephased closed forms", "D2, C, N, P within 1e-10".into()),
    ])
}

pub fn xxz(_cfg: &VerifyConfig) -> CliResult<Vec<Check>> {
    const S: &str = "xxz";
    let mut fixed = Tally::new();
    for delta in [0.0, 1.0] {
        let next = rg_step(&XxzParams64::new(delta, 1.0)?)?;
        fixed.ok(next.delta() == delta, || {
            format!("delta={delta} -> {}", num(next.delta()))
        });
    }

    let mut monotone = Tally::new();
    for i in 1..=1000 {
        let delta = i as f64 * 0.005;
        if delta == 1.0 {
            continue;
        }
        let next = rg_step(&XxzParams64::new(delta, 1.0)?)?.delta();
        let ok = if delta > 1.0 {
            next > delta
        } else {
            next < delta
        };
        monotone.ok(ok, || format!("delta={} -> {}", num(delta), num(next)));
    }

    let mut agree = Tally::new();
    let mut identity = Tally::new();
    let mut variants = Tally::new();
    let mut local = Tally::new();
    for i in 0..1000 {
        let delta = 10.0 * i as f64 / 999.0;
        let rho = qrel_core::ground_state(delta, GroundVariant::Psi0)?;
        let rho_prime = qrel_core::ground_state(delta, GroundVariant::Psi0Prime)?;
        for pair in PairSelector::ALL {
            let cf = xxz_pair_profile(delta, pair)?;
            let a = profile(&reduce_pair(&rho, pair)?)?;
            let b = profile(&reduce_pair(&rho_prime, pair)?)?;
            let gap = |x: &Profile64, y: &Profile64| {
                [
                    x.d2 - y.d2,
                    x.concurrence - y.concurrence,
                    x.n - y.n,
                    x.purity - y.purity,
                ]
                .into_iter()
                .fold(0.0f64, |m, v| m.max(v.abs()))
            };
            let who = || format!("delta={} pair={pair}", num(delta));
            agree.dev(gap(&a, &cf), ID_TOL, who);
            identity.dev(identity_defect(&a).abs(), ID_TOL, who);
            variants.dev(gap(&a, &b), 1e-12, who);
            local.ok(!a.is_bell_nonlocal(), who);
        }
    }

    let mut eigen = Tally::new();
    for delta in [0.0, 0.5, 1.0, 2.0, 5.0, 10.0] {
        let params = XxzParams64::new(delta, 1.0)?;
        let h = block_hamiltonian(&params)?;
        let e0 = qrel_core::ground_energy(&params);
        let psi = ground_vector(delta, GroundVariant::Psi0)?;
        let hpsi = h.mul_vec(&psi)?;
        let resid = hpsi
            .iter()
            .zip(&psi)
            .map(|(a, b)| (a - b * e0).norm())
            .fold(0.0, f64::max);
        eigen.dev(resid, ID_TOL, || format!("delta={}", num(delta)));
        let lowest = eig_hermitian(&h)?[0];
        eigen.dev((lowest - e0).abs(), ID_TOL, || {
            format!("delta={} lowest={} E0={}", num(delta), num(lowest), num(e0))
        });
    }

    Ok(vec![
        fixed.check(S, "RG fixed points at delta = 0, 1", "exact".into()),
        monotone.check(
            S,
            "delta flows away from 1",
            "delta' > delta above 1, delta' < delta below".into(),
        ),
        agree.check(
            S,
            "closed forms match reduced ground states",
            "delta in [0, 10], 1e-10".into(),
        ),
        identity.check(S, "purity identity on the XXZ family", "1e-10".into()),
        variants.check(S, "both degenerate ground states agree", "1e-12".into()),
        local.check(
            S,
            "reduced ground-state pairs are Bell local",
            "N = 0".into(),
        ),
        eigen.check(
            S,
            "block ground state and energy",
            "H psi0 = E0 psi0 and E0 lowest, 1e-10".into(),
        ),
    ])
}

pub fn run(suite: Suite, cfg: &VerifyConfig) -> CliResult<Vec<Check>> {
    if cfg.samples == 0 {
        return Err(CliError::Usage("--samples must be at least 1".into()));
    }
    let mut out = Vec::new();
    if matches!(suite, Suite::Identities | Suite::All) {
        out.extend(identities(cfg)?);
    }
    if matches!(suite, Suite::Boundaries | Suite::All) {
        out.extend(boundaries(cfg)?);
    }
    if matches!(suite, Suite::Channels | Suite::All) {
        out.extend(channels(cfg)?);
    }
    if matches!(suite, Suite::Xxz | Suite::All) {
        out.extend(xxz(cfg)?);
    }
    Ok(out)
}

/// Human-readable lines followed by a one-line JSON summary.
pub fn report(checks: &[Check]) -> (String, Value) {
    let mut text = String::new();
    for c in checks {
        let mark = if c.passed { "PASS" } else { "FAIL" };
        text.push_str(&format!("{mark} [{}] {}: {}\n", c.suite, c.name, c.detail));
        if let Some(cx) = &c.counterexample {
            text.push_str(&format!("     first counterexample: {cx}\n"));
        }
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let summary = json!({
        "passed": checks.len() - failed,
        "failed": failed,
        "checks": checks,
    });
    (text, summary)
}
