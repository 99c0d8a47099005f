use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Identifier of one checkable statement.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum ClaimId {
    AreaRatio,
    ThetaLimit,
    Prop3P1,
    Prop3P2,
    Prop3P3,
    Cor4,
    AreaSumBound,
    PerimeterBound,
    FloorConj,
    SqrtRatioLimit,
    PerimRatio,
    Centroid,
    HahnRatio,
    HarmonicSandwich,
    TSumConj,
    GenAreaRatio,
    TanLimit,
    Series,
    AngleBounds,
    TenWinding,
    WindingGapPi,
    WindingGapDiverges,
    Circumcircle,
    IncircleRatios,
    Windings23,
}

/// Whether a statement is a proved result or an open one being checked.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Theorem,
    ConjectureCheck,
}

impl ClaimId {
    pub const ALL: [ClaimId; 25] = [
        ClaimId::AreaRatio,
        ClaimId::ThetaLimit,
        ClaimId::Prop3P1,
        ClaimId::Prop3P2,
        ClaimId::Prop3P3,
        ClaimId::Cor4,
        ClaimId::AreaSumBound,
        ClaimId::PerimeterBound,
        ClaimId::FloorConj,
        ClaimId::SqrtRatioLimit,
        ClaimId::PerimRatio,
        ClaimId::Centroid,
        ClaimId::HahnRatio,
        ClaimId::HarmonicSandwich,
        ClaimId::TSumConj,
        ClaimId::GenAreaRatio,
        ClaimId::TanLimit,
        ClaimId::Series,
        ClaimId::AngleBounds,
        ClaimId::TenWinding,
        ClaimId::WindingGapPi,
        ClaimId::WindingGapDiverges,
        ClaimId::Circumcircle,
        ClaimId::IncircleRatios,
        ClaimId::Windings23,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::AreaRatio => "AREA_RATIO",
            ClaimId::ThetaLimit => "THETA_LIMIT",
            ClaimId::Prop3P1 => "PROP3_P1",
            ClaimId::Prop3P2 => "PROP3_P2",
            ClaimId::Prop3P3 => "PROP3_P3",
            ClaimId::Cor4 => "COR4",
            ClaimId::AreaSumBound => "AREA_SUM_BOUND",
            ClaimId::PerimeterBound => "PERIMETER_BOUND",
            ClaimId::FloorConj => "FLOOR_CONJ",
            ClaimId::SqrtRatioLimit => "SQRT_RATIO_LIMIT",
            ClaimId::PerimRatio => "PERIM_RATIO",
            ClaimId::Centroid => "CENTROID",
            ClaimId::HahnRatio => "HAHN_RATIO",
            ClaimId::HarmonicSandwich => "HARMONIC_SANDWICH",
            ClaimId::TSumConj => "T_SUM_CONJ",
            ClaimId::GenAreaRatio => "GEN_AREA_RATIO",
            ClaimId::TanLimit => "TAN_LIMIT",
            ClaimId::Series => "SERIES",
            ClaimId::AngleBounds => "ANGLE_BOUNDS",
            ClaimId::TenWinding => "TEN_WINDING",
            ClaimId::WindingGapPi => "WINDING_GAP_PI",
            ClaimId::WindingGapDiverges => "WINDING_GAP_DIVERGES",
            ClaimId::Circumcircle => "CIRCUMCIRCLE",
            ClaimId::IncircleRatios => "INCIRCLE_RATIOS",
            ClaimId::Windings23 => "WINDINGS_2_3",
        }
    }

    pub fn kind(self) -> ClaimKind {
        use ClaimId::*;
        match self {
            FloorConj | SqrtRatioLimit | PerimRatio | Centroid | TSumConj | GenAreaRatio | Circumcircle
            | IncircleRatios | Windings23 => ClaimKind::ConjectureCheck,
            _ => ClaimKind::Theorem,
        }
    }

    /// One-line statement of what is checked.
    pub fn description(self) -> &'static str {
        match self {
            ClaimId::AreaRatio => "A_{n+1}/A_n -> phi",
            ClaimId::ThetaLimit => "theta_n -> atan(sqrt|beta|) = asin(1/phi)",
            ClaimId::Prop3P1 => "alternating golden-ratio sum identity",
            ClaimId::Prop3P2 => "half-integer golden-ratio power sum identity",
            ClaimId::Prop3P3 => "sum phi^(k+1/2)/sqrt5 = sqrt(phi)(F_{n+2}-1) + (beta^n-1)/sqrt(5 phi^3)",
            ClaimId::Cor4 => "lower bound of the alternating sum, upper bound of the half-integer sum",
            ClaimId::AreaSumBound => "|A_1+...+A_n - (sqrt(phi)/2)(F_{n+2}-1)| <= 1/4",
            ClaimId::PerimeterBound => "|S_n - C(sqrt(F_n) - 5^(-1/4))| <= 1, C = phi^2(1+phi^(-1/2))",
            ClaimId::FloorConj => "floor(sqrt F_{n+4}) = floor(sqrt F_{n+2} + sqrt F_n) for n != 8",
            ClaimId::SqrtRatioLimit => "sqrt F_{n+4} / (sqrt F_{n+2} + sqrt F_n) -> 1",
            ClaimId::PerimRatio => "P_{n+1}/P_n -> sqrt(phi)",
            ClaimId::Centroid => "centroid chain d_2, d_3 closed forms and d_{n+1}/d_n -> sqrt(phi)",
            ClaimId::HahnRatio => "Hn(n)/Hn(n-1) -> phi sqrt(phi), with integral sandwich",
            ClaimId::HarmonicSandwich => "1+(m^(1-p)-1)/(1-p) < H_{m,p} < 1+((m+1)^(1-p)-1)/(1-p)",
            ClaimId::TSumConj => "T_{n+1,m}/T_{n,m} -> sqrt((L_{m+2}+F_{m+2} sqrt5)/2)",
            ClaimId::GenAreaRatio => "A_{n+1,m}/A_{n,m} -> phi^((m+1)/2)",
            ClaimId::TanLimit => "tan(theta_n) -> sqrt|beta|",
            ClaimId::Series => "sqrt|beta| sum beta^n/(2n+1) -> atan(sqrt|beta|)",
            ClaimId::AngleBounds => "atan(sqrt(1/2)) <= theta_n <= pi/4",
            ClaimId::TenWinding => "ten triangles complete one winding",
            ClaimId::WindingGapPi => "classic spiral winding gap -> pi",
            ClaimId::WindingGapDiverges => "sqrt F_{n+10} - sqrt F_n increases without bound",
            ClaimId::Circumcircle => "circumcircle area (pi/4)F_{n+2}; circumference",
            ClaimId::IncircleRatios => "A_n/Area(T_n) -> 1.893378716, Area(C_n)/Area(T_n) -> 6.121231835",
            ClaimId::Windings23 => "triangles needed for two and three windings",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    /// Case-insensitive; `-` and `_` are interchangeable.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        ClaimId::ALL
            .into_iter()
            .find(|c| c.name() == norm)
            .ok_or_else(|| Error::UnknownClaim(s.to_string()))
    }
}

impl From<ClaimId> for String {
    fn from(c: ClaimId) -> String {
        c.name().to_string()
    }
}

impl TryFrom<String> for ClaimId {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.name().parse::<ClaimId>().unwrap(), c);
        }
        assert_eq!("ten-winding".parse::<ClaimId>().unwrap(), ClaimId::TenWinding);
        assert!(matches!("NOPE".parse::<ClaimId>(), Err(Error::UnknownClaim(_))));
        let mut sorted = ClaimId::ALL;
        sorted.sort();
        assert_eq!(sorted, ClaimId::ALL);
    }
}
