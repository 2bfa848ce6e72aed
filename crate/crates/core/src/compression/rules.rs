use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Leaf rules of the disjoint compression routine. The derived order is the
/// order in which rules are tried.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleId {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5_1,
    R5_2,
    R5_3,
    R5_4,
    R6_1,
    R6_2,
    R6_3,
    R7_1,
    R7_2_1,
    R7_2_2,
    R7_2_3,
    R7_2_4,
    R7_2_5,
    R8_1,
    R8_2,
    R8_3,
    R9_1,
    R9_2,
    R9_3,
    R9_4,
    R10,
    R11_1_1,
    R11_1_2,
    R11_1_3,
    R11_1_4,
    R11_2_1,
    R11_2_2,
    R11_2_3,
    R11_2_4,
    R11_3,
    R12_1,
    R12_2,
    R12_3_1,
    R12_3_2,
    R12_3_3,
    R12_3_4,
    R13_1,
    R13_2,
    R13_3,
    R13_4,
    R14_1,
    R14_2,
    R15,
    R16,
    R17,
    R18,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleKind {
    Stop,
    Reduction,
    Branching,
}

impl RuleId {
    pub const ALL: [RuleId; 51] = {
        use RuleId::*;
        [
            R0, R1, R2, R3, R4, R5_1, R5_2, R5_3, R5_4, R6_1, R6_2, R6_3, R7_1, R7_2_1, R7_2_2, R7_2_3, R7_2_4,
            R7_2_5, R8_1, R8_2, R8_3, R9_1, R9_2, R9_3, R9_4, R10, R11_1_1, R11_1_2, R11_1_3, R11_1_4, R11_2_1,
            R11_2_2, R11_2_3, R11_2_4, R11_3, R12_1, R12_2, R12_3_1, R12_3_2, R12_3_3, R12_3_4, R13_1, R13_2,
            R13_3, R13_4, R14_1, R14_2, R15, R16, R17, R18,
        ]
    };

    pub fn label(self) -> &'static str {
        use RuleId::*;
        match self {
            R0 => "R0",
            R1 => "R1",
            R2 => "R2",
            R3 => "R3",
            R4 => "R4",
            R5_1 => "R5.1",
            R5_2 => "R5.2",
            R5_3 => "R5.3",
            R5_4 => "R5.4",
            R6_1 => "R6.1",
            R6_2 => "R6.2",
            R6_3 => "R6.3",
            R7_1 => "R7.1",
            R7_2_1 => "R7.2.1",
            R7_2_2 => "R7.2.2",
            R7_2_3 => "R7.2.3",
            R7_2_4 => "R7.2.4",
            R7_2_5 => "R7.2.5",
            R8_1 => "R8.1",
            R8_2 => "R8.2",
            R8_3 => "R8.3",
            R9_1 => "R9.1",
            R9_2 => "R9.2",
            R9_3 => "R9.3",
            R9_4 => "R9.4",
            R10 => "R10",
            R11_1_1 => "R11.1.1",
            R11_1_2 => "R11.1.2",
            R11_1_3 => "R11.1.3",
            R11_1_4 => "R11.1.4",
            R11_2_1 => "R11.2.1",
            R11_2_2 => "R11.2.2",
            R11_2_3 => "R11.2.3",
            R11_2_4 => "R11.2.4",
            R11_3 => "R11.3",
            R12_1 => "R12.1",
            R12_2 => "R12.2",
            R12_3_1 => "R12.3.1",
            R12_3_2 => "R12.3.2",
            R12_3_3 => "R12.3.3",
            R12_3_4 => "R12.3.4",
            R13_1 => "R13.1",
            R13_2 => "R13.2",
            R13_3 => "R13.3",
            R13_4 => "R13.4",
            R14_1 => "R14.1",
            R14_2 => "R14.2",
            R15 => "R15",
            R16 => "R16",
            R17 => "R17",
            R18 => "R18",
        }
    }

    pub fn kind(self) -> RuleKind {
        use RuleId::*;
        match self {
            R0 => RuleKind::Stop,
            R1 | R7_1 | R7_2_1 | R7_2_4 | R11_1_4 | R12_3_2 | R13_2 | R14_1 | R15 => RuleKind::Reduction,
            _ => RuleKind::Branching,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown rule id {0:?}")]
pub struct UnknownRule(pub String);

impl FromStr for RuleId {
    type Err = UnknownRule;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
        RuleId::ALL
            .iter()
            .copied()
            .find(|r| r.label().eq_ignore_ascii_case(t))
            .ok_or_else(|| UnknownRule(s.to_string()))
    }
}

impl Serialize for RuleId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for RuleId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_is_sorted_and_complete() {
        assert!(RuleId::ALL.windows(2).all(|w| w[0] < w[1]));
        assert!(RuleId::ALL.iter().enumerate().all(|(i, r)| r.index() == i));
        assert_eq!(RuleId::R18.index(), 50);
    }

    #[test]
    fn labels_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(r.label().parse::<RuleId>().unwrap(), r);
        }
        assert_eq!("(r11.1.3)".parse::<RuleId>().unwrap(), RuleId::R11_1_3);
        assert!("R11.1".parse::<RuleId>().is_err());
    }
}
