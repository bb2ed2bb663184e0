//! Instance validation, overlap arithmetic and shared result types.

use thiserror::Error;

/// A validated set of `n` pairwise distinct strings of identical length `r`.
///
/// Because all strings have the same length, distinctness is equivalent to
/// the usual superstring-problem requirement that no input string is a
/// substring of another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    strings: Vec<Vec<u8>>,
    r: usize,
}

impl Instance {
    pub fn strings(&self) -> &[Vec<u8>] {
        &self.strings
    }

    /// Common length of all strings.
    pub fn r(&self) -> usize {
        self.r
    }

    /// Number of strings.
    pub fn n(&self) -> usize {
        self.strings.len()
    }

    /// Convenience constructor for string literals.
    pub fn from_strs(raw: &[&str]) -> Result<Self, InstanceError> {
        validate_instance(raw.iter().map(|s| s.as_bytes().to_vec()).collect())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("input contains no strings")]
    EmptyInput,
    #[error("string #{index} has length {found}, expected {expected}")]
    UnequalLengths {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("string #{index} duplicates an earlier string")]
    DuplicateString { index: usize },
    #[error("string #{index} has length {len}, minimum is 2")]
    StringTooShort { index: usize, len: usize },
}

/// Checks lengths and pairwise distinctness, returning a usable [`Instance`].
pub fn validate_instance(raw: Vec<Vec<u8>>) -> Result<Instance, InstanceError> {
    if raw.is_empty() {
        return Err(InstanceError::EmptyInput);
    }
    let r = raw[0].len();
    if r < 2 {
        return Err(InstanceError::StringTooShort { index: 0, len: r });
    }
    for (index, s) in raw.iter().enumerate() {
        if s.len() != r {
            return Err(InstanceError::UnequalLengths {
                index,
                expected: r,
                found: s.len(),
            });
        }
    }
    let mut seen = std::collections::HashSet::new();
    for (index, s) in raw.iter().enumerate() {
        if !seen.insert(s.as_slice()) {
            return Err(InstanceError::DuplicateString { index });
        }
    }
    Ok(Instance { strings: raw, r })
}

/// Length of the longest suffix of `u` that is also a prefix of `v`, capped
/// at `min(|u|, |v|) - 1` so a full match (which would mean containment) is
/// never reported.
///
/// Runs the prefix-function automaton of `v` over `u`, which is linear in
/// `|u| + |v|`; the final automaton state is the longest suffix/prefix match
/// and following failure links enforces the cap.
pub fn max_overlap(u: &[u8], v: &[u8]) -> usize {
    assert!(!u.is_empty() && !v.is_empty(), "overlap of empty string");
    let cap = u.len().min(v.len()) - 1;
    if cap == 0 {
        return 0;
    }
    let pi = prefix_function(v);
    let mut state = 0usize;
    for &c in u {
        while state > 0 && (state == v.len() || v[state] != c) {
            state = pi[state - 1];
        }
        if v[state] == c {
            state += 1;
        }
    }
    // All suffix-of-u = prefix-of-v lengths form the border chain of `state`.
    while state > cap {
        state = pi[state - 1];
    }
    state
}

fn prefix_function(s: &[u8]) -> Vec<usize> {
    let mut pi = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// True iff every instance string occurs in `text` as a contiguous substring.
pub fn is_superstring(text: &[u8], inst: &Instance) -> bool {
    inst.strings().iter().all(|s| contains_sub(text, s))
}

pub(crate) fn contains_sub(text: &[u8], needle: &[u8]) -> bool {
    needle.len() <= text.len() && text.windows(needle.len()).any(|w| w == needle)
}

/// Which algorithm produced a solution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Naive,
    Greedy,
    Tau,
    Gamma,
    /// Hierarchical solution with the given number of levels.
    Hier(usize),
    Opt,
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Algorithm::Naive => write!(f, "naive"),
            Algorithm::Greedy => write!(f, "greedy"),
            Algorithm::Tau => write!(f, "tau"),
            Algorithm::Gamma => write!(f, "gamma"),
            Algorithm::Hier(l) => write!(f, "hier({l})"),
            Algorithm::Opt => write!(f, "opt"),
        }
    }
}

/// A superstring together with the algorithm that produced it and its
/// length/compression statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperstringSolution {
    pub text: Vec<u8>,
    pub algorithm: Algorithm,
    pub length: usize,
    /// `r * n` minus the superstring length.
    pub compression: usize,
}

impl SuperstringSolution {
    pub(crate) fn new(text: Vec<u8>, algorithm: Algorithm, inst: &Instance) -> Self {
        let naive_len = inst.r() * inst.n();
        let length = text.len();
        assert!(
            length <= naive_len,
            "solution longer than plain concatenation"
        );
        SuperstringSolution {
            length,
            compression: naive_len - length,
            text,
            algorithm,
        }
    }
}

/// Concatenates the instance strings in order: length `r * n`, compression 0.
pub fn naive_concat(inst: &Instance) -> SuperstringSolution {
    let text = inst.strings().concat();
    SuperstringSolution::new(text, Algorithm::Naive, inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Exhaustive scan over all candidate overlap lengths; the definition the
    /// fast implementation must agree with.
    fn max_overlap_naive(u: &[u8], v: &[u8]) -> usize {
        let cap = u.len().min(v.len()) - 1;
        (0..=cap)
            .rev()
            .find(|&k| u[u.len() - k..] == v[..k])
            .unwrap()
    }

    fn demo_set() -> Instance {
        Instance::from_strs(&[
            "ACGCA", "CGCAT", "GCATG", "CGCAG", "CAGTC", "CAGCA", "CATAA",
        ])
        .unwrap()
    }

    #[test]
    fn overlap_examples() {
        assert_eq!(max_overlap(b"ACGCA", b"CGCAT"), 4);
        assert_eq!(max_overlap(b"AB", b"CD"), 0);
        // Frozen from the exhaustive scan.
        assert_eq!(max_overlap_naive(b"CAGTC", b"ACGCA"), 0);
        assert_eq!(max_overlap(b"CAGTC", b"ACGCA"), 0);
    }

    #[test]
    fn overlap_cap_excludes_containment() {
        // "AA" is contained in both neighbors; the cap keeps the answer
        // below a full match of the shorter string.
        assert_eq!(max_overlap(b"AA", b"AAB"), 1);
        assert_eq!(max_overlap(b"AAA", b"AA"), 1);
        assert_eq!(max_overlap(b"A", b"A"), 0);
    }

    #[test]
    fn validate_demo_set() {
        let inst = demo_set();
        assert_eq!(inst.r(), 5);
        assert_eq!(inst.n(), 7);
    }

    #[test]
    fn validate_rejections() {
        assert_eq!(
            validate_instance(vec![b"AB".to_vec(), b"AB".to_vec()]),
            Err(InstanceError::DuplicateString { index: 1 })
        );
        assert_eq!(
            validate_instance(vec![b"AB".to_vec(), b"ABC".to_vec()]),
            Err(InstanceError::UnequalLengths {
                index: 1,
                expected: 2,
                found: 3
            })
        );
        assert_eq!(validate_instance(vec![]), Err(InstanceError::EmptyInput));
        assert_eq!(
            validate_instance(vec![b"A".to_vec()]),
            Err(InstanceError::StringTooShort { index: 0, len: 1 })
        );
    }

    #[test]
    fn superstring_check() {
        let inst = demo_set();
        assert!(is_superstring(b"ACGCATGCGCAGCACAGTCCATAA", &inst));
        assert!(!is_superstring(b"", &inst));
        assert!(is_superstring(&naive_concat(&inst).text, &inst));
    }

    #[test]
    fn naive_lengths() {
        assert_eq!(naive_concat(&demo_set()).length, 35);
        assert_eq!(naive_concat(&demo_set()).compression, 0);

        let single = Instance::from_strs(&["AB"]).unwrap();
        assert_eq!(naive_concat(&single).text, b"AB");

        let two = Instance::from_strs(&["AB", "CD"]).unwrap();
        assert_eq!(naive_concat(&two).length, 4);
    }

    proptest! {
        #[test]
        fn overlap_matches_exhaustive_definition(
            u in proptest::collection::vec(0u8..4, 1..24),
            v in proptest::collection::vec(0u8..4, 1..24),
        ) {
            let k = max_overlap(&u, &v);
            prop_assert_eq!(k, max_overlap_naive(&u, &v));
            prop_assert_eq!(&u[u.len() - k..], &v[..k]);
        }

        #[test]
        fn overlap_cap_never_binds_for_distinct_equal_length(
            mut raw in proptest::collection::hash_set(
                proptest::collection::vec(0u8..3, 4), 2..6)
        ) {
            let strings: Vec<Vec<u8>> = raw.drain().collect();
            for a in &strings {
                for b in &strings {
                    if a != b {
                        // Equal-length distinct strings can never fully
                        // overlap, so the cap is structural, not binding.
                        prop_assert!(max_overlap(a, b) < a.len());
                    }
                }
            }
        }
    }
}
