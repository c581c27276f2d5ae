use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::exactmath::{falling_factorial, Rational};

type MemoKey = (Vec<u32>, Vec<u32>);

/// Shared memo of unnormalized Murnaghan-Nakayama values keyed by
/// (diagram, remaining class parts). Readers never block each other and a
/// racing writer only ever inserts the value every thread would compute.
fn memo() -> &'static RwLock<HashMap<MemoKey, BigInt>> {
    static MEMO: OnceLock<RwLock<HashMap<MemoKey, BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

fn beta_set(parts: &[u32]) -> Vec<u32> {
    let l = parts.len() as u32;
    parts
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect()
}

fn from_beta_set(mut beta: Vec<u32>) -> Vec<u32> {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let l = beta.len() as u32;
    beta.iter()
        .enumerate()
        .map(|(i, &b)| b - (l - 1 - i as u32))
        .filter(|&p| p > 0)
        .collect()
}

/// Unnormalized `χ^λ` on the class with parts `rest` (any order, sizes
/// summing to `|λ|`). Rim hooks of size `rest[0]` are removed first.
fn mn(lambda: &[u32], rest: &[u32]) -> BigInt {
    if rest.is_empty() {
        return if lambda.is_empty() {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    let key = (lambda.to_vec(), rest.to_vec());
    if let Some(v) = memo().read().expect("memo lock").get(&key) {
        return v.clone();
    }
    let r = rest[0];
    let beta = beta_set(lambda);
    let mut total = BigInt::zero();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let height = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        let mu = from_beta_set(nb);
        let v = mn(&mu, &rest[1..]);
        if height % 2 == 0 {
            total += v;
        } else {
            total -= v;
        }
    }
    memo()
        .write()
        .expect("memo lock")
        .entry(key)
        .or_insert_with(|| total.clone());
    total
}

/// Unnormalized character value `χ^λ(π)` (trace, not ratio).
pub fn mn_character_unnormalized(lambda: &Partition, pi: &Partition) -> Result<BigInt> {
    if lambda.size() != pi.size() {
        return Err(Error::InvalidInput(format!(
            "|λ| = {} but |π| = {}",
            lambda.size(),
            pi.size()
        )));
    }
    Ok(mn(lambda.parts(), pi.parts()))
}

/// `dim λ`, through the same recursion at the class `(1^n)`.
pub fn dimension(lambda: &Partition) -> BigInt {
    mn(lambda.parts(), &vec![1; lambda.size() as usize])
}

/// Normalized character `χ^λ_π = χ^λ(π) / dim λ`.
pub fn mn_character(lambda: &Partition, pi: &Partition) -> Result<Rational> {
    let v = mn_character_unnormalized(lambda, pi)?;
    Ok(Rational::new(v, dimension(lambda)))
}

/// `Σ_π(λ) = (n↓k) χ^λ_(π ∪ 1^(n-k))`, zero when `n < k`.
///
/// Panics if the value is not an integer, which would contradict the
/// integrality of normalized characters.
pub fn normalized_character(pi: &Partition, lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let k = pi.size();
    let Some(padded) = pi.pad_to(n) else {
        return BigInt::zero();
    };
    let chi = mn_character(lambda, &padded).expect("sizes agree after padding");
    let v = chi * Rational::from_integer(falling_factorial(u64::from(n), u64::from(k)));
    assert!(v.is_integer(), "Σ_{pi}({lambda}) = {v} is not an integer");
    v.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{int, rat};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    #[test]
    fn character_examples() {
        assert_eq!(mn_character(&part(&[3]), &part(&[2, 1])).unwrap(), int(1));
        assert_eq!(
            mn_character(&part(&[1, 1, 1]), &part(&[2, 1])).unwrap(),
            int(-1)
        );
        assert_eq!(
            mn_character(&part(&[2, 1]), &part(&[3])).unwrap(),
            rat(-1, 2)
        );
        assert!(mn_character(&part(&[2, 1]), &part(&[2])).is_err());
    }

    #[test]
    fn normalized_examples() {
        assert_eq!(normalized_character(&part(&[1]), &part(&[3, 2])), 5.into());
        assert_eq!(
            normalized_character(&part(&[3]), &part(&[2, 1])),
            (-3).into()
        );
        assert_eq!(
            normalized_character(&part(&[2]), &part(&[1, 1])),
            (-2).into()
        );
        assert_eq!(normalized_character(&part(&[3]), &part(&[2])), 0.into());
        assert_eq!(
            normalized_character(&Partition::empty(), &Partition::empty()),
            1.into()
        );
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&Partition::empty()), 1.into());
        assert_eq!(dimension(&part(&[3, 2])), 5.into());
        assert_eq!(dimension(&part(&[2, 2, 1])), 5.into());
    }
}
