use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Integer partition: weakly decreasing positive parts. Also used for Young
/// diagrams (rows) and cycle types.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Accepts parts in any order; zeros are dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Rejects parts that are zero or not weakly decreasing.
    pub fn from_parts(parts: Vec<u32>) -> crate::Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: u32) -> Self {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|π| - ℓ(π)`.
    pub fn reflection_length(&self) -> u32 {
        self.size() - self.0.len() as u32
    }

    pub fn transpose(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Multiplicity of each part value, `a_m` for `m = 1..=max part`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((v, a)) if *v == p => *a += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Pads with parts equal to 1 up to size `n` (`π ∪ 1^(n-|π|)`).
    pub fn pad_to(&self, n: u32) -> Option<Partition> {
        let k = self.size();
        (n >= k).then(|| {
            let mut parts = self.0.clone();
            parts.extend(std::iter::repeat_n(1, (n - k) as usize));
            Partition(parts)
        })
    }

    /// Hook-length dimension; kept as an independent cross-check.
    pub fn hook_length_dimension(&self) -> num_bigint::BigInt {
        use num_bigint::BigInt;
        use num_traits::One;
        let t = self.transpose();
        let mut prod = BigInt::one();
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = t.0[j as usize] - i as u32 - 1;
                prod *= BigInt::from(arm + leg + 1);
            }
        }
        let mut fact = BigInt::one();
        for i in 1..=self.size() {
            fact *= BigInt::from(i);
        }
        fact / prod
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> crate::Result<Self> {
        Partition::from_parts(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Parses `"(a,b,c)"`, bare `"a,b,c"`, `"()"` and the empty string.
/// Whitespace is ignored. Parts must be positive and weakly decreasing.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let t = s.trim();
        let inner = match (t.strip_prefix('('), t.ends_with(')')) {
            (Some(rest), true) => &rest[..rest.len() - 1],
            (None, false) => t,
            _ => {
                return Err(Error::Parse {
                    what: "partition",
                    token: t.to_string(),
                })
            }
        };
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            let v: u32 = tok.parse().map_err(|_| Error::Parse {
                what: "partition part",
                token: tok.to_string(),
            })?;
            if v == 0 {
                return Err(Error::Parse {
                    what: "partition part",
                    token: tok.to_string(),
                });
            }
            parts.push(v);
        }
        Partition::from_parts(parts).map_err(|_| Error::Parse {
            what: "partition (parts must be weakly decreasing)",
            token: t.to_string(),
        })
    }
}

/// All partitions of `n`, in reverse-lexicographic order:
/// `(n), (n-1,1), (n-2,2), (n-2,1,1), ...`, ending with `(1^n)`.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of every size `0..=n`, size-major.
pub fn partitions_up_to(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}
