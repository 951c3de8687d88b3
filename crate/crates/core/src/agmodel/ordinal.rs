//! Ordinals below `ω²`, written `ω·m + t` and rendered as `omega*m+t`.

use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrdinalIndex {
    pub omega: u64,
    pub finite: u64,
}

impl OrdinalIndex {
    pub const ZERO: OrdinalIndex = OrdinalIndex { omega: 0, finite: 0 };

    pub fn new(omega: u64, finite: u64) -> Self {
        OrdinalIndex { omega, finite }
    }

    pub fn finite(t: u64) -> Self {
        Self::new(0, t)
    }

    pub fn succ(self) -> Self {
        Self::new(self.omega, self.finite + 1)
    }

    pub fn is_limit(self) -> bool {
        self.omega > 0 && self.finite == 0
    }

    /// `self + other`. Adding a limit absorbs the finite part of `self`.
    pub fn add(self, other: OrdinalIndex) -> Self {
        if other.omega == 0 {
            Self::new(self.omega, self.finite + other.finite)
        } else {
            Self::new(self.omega + other.omega, other.finite)
        }
    }
}

impl fmt::Display for OrdinalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.omega, self.finite) {
            (0, t) => write!(f, "{t}"),
            (m, 0) => write!(f, "omega*{m}"),
            (m, t) => write!(f, "omega*{m}+{t}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse ordinal {0:?}")]
pub struct ParseOrdinalError(String);

impl FromStr for OrdinalIndex {
    type Err = ParseOrdinalError;

    /// Accepts `7`, `ω`, `ω+2`, `ω·3+1`, and ASCII spellings with `w` or
    /// `omega` and `*`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseOrdinalError(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let t = t.replace("omega", "ω").replace('w', "ω").replace('*', "·");
        if t.is_empty() {
            return Err(err());
        }
        let (head, tail) = match t.split_once('+') {
            Some((h, r)) => (h.to_string(), Some(r.to_string())),
            None => (t.clone(), None),
        };
        let parse_u = |x: &str| x.parse::<u64>().map_err(|_| err());
        if !head.contains('ω') {
            if tail.is_some() {
                return Err(err());
            }
            return Ok(Self::finite(parse_u(&head)?));
        }
        let omega = if head == "ω" {
            1
        } else if let Some(m) = head.strip_prefix("ω·") {
            parse_u(m)?
        } else {
            return Err(err());
        };
        let finite = match tail {
            Some(r) => parse_u(&r)?,
            None => 0,
        };
        Ok(Self::new(omega, finite))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_parse_round_trip() {
        for (m, t) in [(0, 0), (0, 5), (1, 0), (1, 1), (2, 0), (3, 7)] {
            let o = OrdinalIndex::new(m, t);
            assert_eq!(o.to_string().parse::<OrdinalIndex>().unwrap(), o);
        }
        assert_eq!(OrdinalIndex::new(1, 1).to_string(), "omega*1+1");
        assert_eq!(OrdinalIndex::finite(4).to_string(), "4");
        assert_eq!("ω·2+1".parse::<OrdinalIndex>().unwrap(), OrdinalIndex::new(2, 1));
        assert_eq!("w*2+1".parse::<OrdinalIndex>().unwrap(), OrdinalIndex::new(2, 1));
        assert_eq!("omega".parse::<OrdinalIndex>().unwrap(), OrdinalIndex::new(1, 0));
        assert!("ω+".parse::<OrdinalIndex>().is_err());
        assert!("3+1".parse::<OrdinalIndex>().is_err());
    }

    #[test]
    fn ordering_and_addition() {
        assert!(OrdinalIndex::finite(100) < OrdinalIndex::new(1, 0));
        assert!(OrdinalIndex::new(1, 5) < OrdinalIndex::new(2, 0));
        assert_eq!(OrdinalIndex::finite(3).add(OrdinalIndex::new(1, 0)), OrdinalIndex::new(1, 0));
        assert_eq!(OrdinalIndex::new(1, 0).add(OrdinalIndex::finite(2)), OrdinalIndex::new(1, 2));
    }
}
