//! Boundary curves in the `(C, D²)` plane, the pure-state `N` relations, the
//! purity identity and the band classifier for Bell-nonlocal and Bell-local
//! two-qubit states.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::measures::ResourceProfile;
use crate::scalar::Real;

/// The named `D²(C)` curves. `Pf*` kinds depend on the phase-flip
/// attenuation `Y` and collapse exactly onto their noiseless counterparts at
/// `Y = 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundaryKind {
    /// `D² + (3/2)C² = 1`, lower edge of the nonlocal W pairs.
    BnbsLower,
    /// `D² + C² = 1`, reached by pure pairs.
    PureUpper,
    /// `D² = (1 − C)²`, traced by the Horodecki mixtures.
    BlbsHorodecki,
    /// `D² + C² = 1/2`.
    BlbsLowerHalf,
    /// `D² + C²(2 + Y²)/(2Y²) = 1`.
    PfBnbsLower,
    /// `D² + C²/Y² = 1`.
    PfPureUpper,
    /// `D² = (1 − C/Y)²`, defined for `C ≤ Y`.
    PfBlbsHorodecki,
    /// `D² + C²/Y² = 1/2`.
    PfBlbsLowerHalf,
    /// Lower curve for the outer pair of the XXZ block,
    /// `D² = ((C² + √(C² − C⁴)) / (2C² + √(C² − C⁴)))²`.
    Xxz13,
    /// Lower curve for neighbouring XXZ pairs,
    /// `D² = (13C⁴ − 20C² + 8) / (2(C² − 2)²)`.
    Xxz12,
}

impl BoundaryKind {
    pub const ALL: [BoundaryKind; 10] = [
        BoundaryKind::BnbsLower,
        BoundaryKind::PureUpper,
        BoundaryKind::BlbsHorodecki,
        BoundaryKind::BlbsLowerHalf,
        BoundaryKind::PfBnbsLower,
        BoundaryKind::PfPureUpper,
        BoundaryKind::PfBlbsHorodecki,
        BoundaryKind::PfBlbsLowerHalf,
        BoundaryKind::Xxz13,
        BoundaryKind::Xxz12,
    ];

    pub fn uses_y(self) -> bool {
        matches!(
            self,
            BoundaryKind::PfBnbsLower
                | BoundaryKind::PfPureUpper
                | BoundaryKind::PfBlbsHorodecki
                | BoundaryKind::PfBlbsLowerHalf
        )
    }

    /// The Y-free curve this kind reduces to at `Y = 1`.
    pub fn noiseless(self) -> BoundaryKind {
        match self {
            BoundaryKind::PfBnbsLower => BoundaryKind::BnbsLower,
            BoundaryKind::PfPureUpper => BoundaryKind::PureUpper,
            BoundaryKind::PfBlbsHorodecki => BoundaryKind::BlbsHorodecki,
            BoundaryKind::PfBlbsLowerHalf => BoundaryKind::BlbsLowerHalf,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryKind::BnbsLower => "bnbs-lower",
            BoundaryKind::PureUpper => "pure-upper",
            BoundaryKind::BlbsHorodecki => "blbs-horodecki",
            BoundaryKind::BlbsLowerHalf => "blbs-lower-half",
            BoundaryKind::PfBnbsLower => "pf-bnbs-lower",
            BoundaryKind::PfPureUpper => "pf-pure-upper",
            BoundaryKind::PfBlbsHorodecki => "pf-blbs-horodecki",
            BoundaryKind::PfBlbsLowerHalf => "pf-blbs-lower-half",
            BoundaryKind::Xxz13 => "xxz-13",
            BoundaryKind::Xxz12 => "xxz-12",
        }
    }
}

impl fmt::Display for BoundaryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        BoundaryKind::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .ok_or_else(|| Error::Parse(format!("unknown boundary kind {s:?}")))
    }
}

/// `D²` on the curve `kind` at concurrence `c`; `y` is ignored by the
/// Y-free kinds.
pub fn boundary_d2<T: Real>(kind: BoundaryKind, c: T, y: T) -> Result<T> {
    if !(c >= T::zero() && c <= T::one()) {
        return Err(Error::Domain(format!("concurrence {c} outside [0, 1]")));
    }
    if kind.uses_y() && !(y > T::zero() && y <= T::one()) {
        return Err(Error::Domain(format!("attenuation Y = {y} outside (0, 1]")));
    }
    let one = T::one();
    let two = T::of(2.0);
    let half = T::of(0.5);
    let c2 = c * c;
    let y2 = y * y;
    let d2 = match kind {
        BoundaryKind::BnbsLower => one - c2 * T::of(1.5),
        BoundaryKind::PureUpper => one - c2,
        BoundaryKind::BlbsHorodecki => (one - c) * (one - c),
        BoundaryKind::BlbsLowerHalf => half - c2,
        BoundaryKind::PfBnbsLower => one - c2 * ((two + y2) / (two * y2)),
        BoundaryKind::PfPureUpper => one - c2 / y2,
        BoundaryKind::PfBlbsHorodecki => {
            if c > y {
                return Err(Error::Domain(format!("concurrence {c} exceeds Y = {y}")));
            }
            let k = one - c / y;
            k * k
        }
        BoundaryKind::PfBlbsLowerHalf => half - c2 / y2,
        BoundaryKind::Xxz13 | BoundaryKind::Xxz12 if c == T::zero() => {
            return Err(Error::Domain(format!("{kind} is defined for C in (0, 1]")));
        }
        BoundaryKind::Xxz13 => {
            let r = (c2 - c2 * c2).max(T::zero()).sqrt();
            let k = (c2 + r) / (two * c2 + r);
            k * k
        }
        BoundaryKind::Xxz12 => {
            let g = c2 - two;
            (T::of(13.0) * c2 * c2 - T::of(20.0) * c2 + T::of(8.0)) / (two * g * g)
        }
    };
    Ok(d2)
}

/// Maximal Bell nonlocality and coherence of a pure pair with concurrence
/// `c`: `N = 2√(1 + c²) − 2`, `D² = 1 − c²`.
pub fn pure_state_relations<T: Real>(c: T) -> Result<(T, T)> {
    if !(c >= T::zero() && c <= T::one()) {
        return Err(Error::Domain(format!("concurrence {c} outside [0, 1]")));
    }
    let two = T::of(2.0);
    Ok((two * (T::one() + c * c).sqrt() - two, T::one() - c * c))
}

/// Pure-pair `N` as a function of coherence, `2√(2 − D²) − 2`.
pub fn pure_state_n_from_d2<T: Real>(d2: T) -> Result<T> {
    if !(d2 >= T::zero() && d2 <= T::one()) {
        return Err(Error::Domain(format!("D² = {d2} outside [0, 1]")));
    }
    let two = T::of(2.0);
    Ok(two * (two - d2).sqrt() - two)
}

/// `D² + 2((N + 2)/(2√2))² − 2`, zero along the pure-pair curve.
pub fn pure_state_residual<T: Real>(n: T, d2: T) -> T {
    let k = (n + T::of(2.0)) / (T::of(2.0) * T::SQRT_2());
    d2 + T::of(2.0) * k * k - T::of(2.0)
}

/// Signed `D² + C² − P`. Zero for every W-family pair; not universal.
pub fn identity_defect<T: Real>(pr: &ResourceProfile<T>) -> T {
    pr.d2 + pr.concurrence * pr.concurrence - pr.purity
}

/// Whether `(c, d2)` sits inside the nonlocal band, strictly above the
/// lower curve and at most `tol` above the upper curve. `y = 1` gives the
/// noiseless band.
pub fn in_nonlocal_band<T: Real>(c: T, d2: T, y: T, tol: T) -> Result<bool> {
    let lower = boundary_d2(BoundaryKind::PfBnbsLower, c, y)?;
    let upper = boundary_d2(BoundaryKind::PfPureUpper, c, y)?;
    Ok(d2 > lower && d2 <= upper + tol)
}

/// Band labels of the `(C, D²)` plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RegionLabel {
    BnbsOnly,
    BlbsOnly,
    Outside,
}

impl RegionLabel {
    pub fn name(self) -> &'static str {
        match self {
            RegionLabel::BnbsOnly => "BNBS_ONLY",
            RegionLabel::BlbsOnly => "BLBS_ONLY",
            RegionLabel::Outside => "OUTSIDE",
        }
    }
}

impl fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Edge tolerance of the classifier bands.
pub const REGION_TOL: f64 = 1e-12;

/// Label a point by the five region bands, read literally: lower
/// bounds written `<` are strict, bounds written `≤` are inclusive, each
/// with [`REGION_TOL`] slack in the inclusive direction. Unlisted points,
/// including the gaps between bands, are `Outside`.
pub fn classify_region<T: Real>(c: T, d2: T) -> RegionLabel {
    let tol = T::of(REGION_TOL);
    if !(c > T::zero() && c <= T::one() + tol && d2 >= -tol && d2 <= T::one() + tol) {
        return RegionLabel::Outside;
    }
    let c2 = c * c;
    let one = T::one();
    let bnbs_lower = one - T::of(1.5) * c2;
    let pure_upper = one - c2;
    let nonlocal = d2 > bnbs_lower + tol && d2 <= pure_upper + tol;
    let below_bnbs = d2 <= bnbs_lower + tol;

    if c <= T::of(0.5) + tol {
        if nonlocal {
            return RegionLabel::BnbsOnly;
        }
        if below_bnbs && d2 >= T::of(0.5) - c2 - tol {
            return RegionLabel::BlbsOnly;
        }
    } else if c <= T::of(0.8) + tol {
        if nonlocal {
            return RegionLabel::BnbsOnly;
        }
        if below_bnbs && d2 >= (one - c) * (one - c) - tol {
            return RegionLabel::BlbsOnly;
        }
    } else if nonlocal {
        return RegionLabel::BnbsOnly;
    }
    RegionLabel::Outside
}

/// Whether a label disagrees with a measured Bell nonlocality.
pub fn label_contradicts<T: Real>(label: RegionLabel, pr: &ResourceProfile<T>) -> bool {
    match label {
        RegionLabel::BnbsOnly => !pr.is_bell_nonlocal(),
        RegionLabel::BlbsOnly => pr.is_bell_nonlocal(),
        RegionLabel::Outside => false,
    }
}
