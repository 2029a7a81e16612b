use std::fmt;
use std::str::FromStr;

/// A single value `a` or an inclusive range `a..b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntRange {
    pub lo: usize,
    pub hi: usize,
}

impl IntRange {
    pub fn single(v: usize) -> Self {
        IntRange { lo: v, hi: v }
    }

    pub fn values(&self) -> Vec<usize> {
        (self.lo..=self.hi).collect()
    }

    pub fn is_single(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for IntRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_single() {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}..{}", self.lo, self.hi)
        }
    }
}

impl FromStr for IntRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("expected a non-negative integer, got `{t}`"))
        };
        match s.split_once("..") {
            None => Ok(IntRange::single(num(s)?)),
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                let (lo, hi) = (num(a)?, num(b)?);
                if lo > hi {
                    return Err(format!("empty range {lo}..{hi}"));
                }
                Ok(IntRange { lo, hi })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses() {
        assert_eq!("3".parse::<IntRange>().unwrap(), IntRange::single(3));
        assert_eq!("2..4".parse::<IntRange>().unwrap().values(), vec![2, 3, 4]);
        assert_eq!("2..=4".parse::<IntRange>().unwrap().values(), vec![2, 3, 4]);
        assert!("4..2".parse::<IntRange>().is_err());
        assert!("-1".parse::<IntRange>().is_err());
        assert!("x..3".parse::<IntRange>().is_err());
    }
}
