use alloc::vec::Vec;
use core::fmt;

use crate::scalars::{CkAssignment, CkValue, IndexSet, MAX_PARAMS};

/// Largest supported size of the fundamental representation.
pub const MAX_N: usize = MAX_PARAMS + 1;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecError {
    UnsupportedN { n: usize, min: usize, max: usize },
    InvalidPermutation(Vec<usize>),
    AssignmentLength { expected: usize, got: usize },
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecError::UnsupportedN { n, min, max } => {
                write!(f, "unsupported N = {n} (expected {min} ≤ N ≤ {max})")
            }
            SpecError::InvalidPermutation(s) => write!(f, "{s:?} is not a permutation of 1..{}", s.len()),
            SpecError::AssignmentLength { expected, got } => {
                write!(f, "expected {expected} Cayley-Klein parameters, got {got}")
            }
        }
    }
}

impl core::error::Error for SpecError {}

/// Selects one group `SO_v(N; j; σ)`: the size `N`, the permutation `σ`
/// (1-based, `σ_i` is the image of position `i`) and the parameter values.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    n: usize,
    sigma: Vec<usize>,
    assignment: CkAssignment,
}

impl GroupSpec {
    pub fn new(n: usize, sigma: Vec<usize>, assignment: CkAssignment) -> Result<Self, SpecError> {
        if !(2..=MAX_N).contains(&n) {
            return Err(SpecError::UnsupportedN { n, min: 2, max: MAX_N });
        }
        if !is_permutation(&sigma) || sigma.len() != n {
            return Err(SpecError::InvalidPermutation(sigma));
        }
        if assignment.len() != n - 1 {
            return Err(SpecError::AssignmentLength {
                expected: n - 1,
                got: assignment.len(),
            });
        }
        Ok(GroupSpec { n, sigma, assignment })
    }

    /// All parameters formal, the generic quantum group.
    pub fn formal(n: usize, sigma: Vec<usize>) -> Result<Self, SpecError> {
        let len = n.saturating_sub(1);
        Self::new(n, sigma, CkAssignment::all(len, CkValue::Formal))
    }

    /// Contraction with nilpotent parameters on `nil` and unit values elsewhere.
    pub fn contraction(n: usize, sigma: Vec<usize>, nil: IndexSet) -> Result<Self, SpecError> {
        let len = n.saturating_sub(1);
        Self::new(n, sigma, CkAssignment::nilpotent_on(len, nil))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of Cayley-Klein parameters, `N - 1`.
    pub fn nparams(&self) -> usize {
        self.n - 1
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// `σ_i` for a 1-based position.
    pub fn sigma_at(&self, i: usize) -> usize {
        self.sigma[i - 1]
    }

    /// Position `i` with `σ_i = a`.
    pub fn position_of(&self, a: usize) -> usize {
        self.sigma.iter().position(|&s| s == a).expect("label in range") + 1
    }

    pub fn assignment(&self) -> &CkAssignment {
        &self.assignment
    }

    pub fn nilpotent_set(&self) -> IndexSet {
        self.assignment.nilpotent_set()
    }

    /// Same group with a different parameter assignment.
    pub fn with_assignment(&self, assignment: CkAssignment) -> Result<Self, SpecError> {
        Self::new(self.n, self.sigma.clone(), assignment)
    }

    /// The identity permutation is written `σ₀`.
    pub fn is_identity_permutation(&self) -> bool {
        self.sigma.iter().enumerate().all(|(i, &s)| s == i + 1)
    }
}

pub fn is_permutation(s: &[usize]) -> bool {
    let mut seen = alloc::vec![false; s.len()];
    for &x in s {
        if x == 0 || x > s.len() || seen[x - 1] {
            return false;
        }
        seen[x - 1] = true;
    }
    true
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// All nonempty subsets of `{1, ..., m}`, ordered by size then bitmask.
pub fn nonempty_subsets(m: usize) -> Vec<IndexSet> {
    let mut out: Vec<IndexSet> = (1u32..(1 << m)).map(|b| IndexSet::from_bits(b << 1)).collect();
    out.sort_by_key(|s| (s.len(), s.bits()));
    out
}
