//! Seeded random instance generation, for benchmarks and property sweeps.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::instance::{validate_instance, Instance, InstanceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("cannot generate {n} distinct strings: only {available} exist")]
    InfeasibleGeneration { n: usize, available: usize },
    #[error("alphabet size {sigma} out of range 1..=26")]
    SigmaOutOfRange { sigma: usize },
    #[error("reference length {len} shorter than r = {r}")]
    ReferenceTooShort { len: usize, r: usize },
    #[error(transparent)]
    Invalid(#[from] InstanceError),
}

fn alphabet(sigma: usize) -> Result<Vec<u8>, GenError> {
    if sigma == 0 || sigma > 26 {
        return Err(GenError::SigmaOutOfRange { sigma });
    }
    Ok((0..sigma).map(|i| b'A' + i as u8).collect())
}

/// Number of distinct strings of length `r` over `sigma` letters, saturating.
fn space_size(sigma: usize, r: usize) -> usize {
    let mut size: u128 = 1;
    for _ in 0..r {
        size = size.saturating_mul(sigma as u128);
        if size > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    size as usize
}

/// `n` distinct uniform random strings of length `r` over the first `sigma`
/// uppercase letters. Deterministic for a given seed.
pub fn random_instance(n: usize, r: usize, sigma: usize, seed: u64) -> Result<Instance, GenError> {
    let letters = alphabet(sigma)?;
    let available = space_size(sigma, r);
    if available < n {
        return Err(GenError::InfeasibleGeneration { n, available });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = std::collections::HashSet::new();
    let mut strings = Vec::with_capacity(n);
    while strings.len() < n {
        let s: Vec<u8> = (0..r).map(|_| letters[rng.gen_range(0..sigma)]).collect();
        if seen.insert(s.clone()) {
            strings.push(s);
        }
    }
    Ok(validate_instance(strings)?)
}

/// `n` distinct length-`r` substrings sampled from one random reference
/// string, which guarantees overlap structure between them. Deterministic for
/// a given seed.
pub fn reference_instance(
    n: usize,
    r: usize,
    sigma: usize,
    reference_len: usize,
    seed: u64,
) -> Result<Instance, GenError> {
    let letters = alphabet(sigma)?;
    if reference_len < r {
        return Err(GenError::ReferenceTooShort {
            len: reference_len,
            r,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // A reference drawn over a small alphabet may repeat substrings; retry
    // with a fresh one before giving up.
    let mut last_available = 0;
    for _ in 0..100 {
        let reference: Vec<u8> = (0..reference_len)
            .map(|_| letters[rng.gen_range(0..sigma)])
            .collect();
        let mut distinct: Vec<&[u8]> = reference.windows(r).collect();
        distinct.sort_unstable();
        distinct.dedup();
        last_available = distinct.len();
        if distinct.len() < n {
            continue;
        }
        let positions = reference_len - r + 1;
        let mut seen = std::collections::HashSet::new();
        let mut strings = Vec::with_capacity(n);
        while strings.len() < n {
            let start = rng.gen_range(0..positions);
            let s = reference[start..start + r].to_vec();
            if seen.insert(s.clone()) {
                strings.push(s);
            }
        }
        return Ok(validate_instance(strings)?);
    }
    Err(GenError::InfeasibleGeneration {
        n,
        available: last_available,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_deterministic_and_distinct() {
        let a = random_instance(7, 5, 4, 1).unwrap();
        let b = random_instance(7, 5, 4, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n(), 7);
        assert_eq!(a.r(), 5);
        let c = random_instance(7, 5, 4, 2).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn uniform_infeasible() {
        assert_eq!(
            random_instance(5, 1, 2, 1),
            Err(GenError::InfeasibleGeneration { n: 5, available: 2 })
        );
        // Exactly exhausting the space still works.
        let full = random_instance(8, 3, 2, 9).unwrap();
        assert_eq!(full.n(), 8);
    }

    #[test]
    fn reference_substrings() {
        let inst = reference_instance(10, 5, 4, 30, 7).unwrap();
        assert_eq!(inst.n(), 10);
        // All strings really are substrings of one reference: they chain with
        // heavy overlaps far more often than uniform strings would, which is
        // all this mode is for. Spot-check determinism instead of structure.
        assert_eq!(inst, reference_instance(10, 5, 4, 30, 7).unwrap());
    }

    #[test]
    fn reference_too_short() {
        assert_eq!(
            reference_instance(2, 5, 4, 3, 1),
            Err(GenError::ReferenceTooShort { len: 3, r: 5 })
        );
    }

    #[test]
    fn reference_infeasible() {
        // A one-letter alphabet has a single distinct substring.
        assert!(matches!(
            reference_instance(3, 4, 1, 20, 1),
            Err(GenError::InfeasibleGeneration { .. })
        ));
    }
}
