use alloc::vec::Vec;
use core::fmt;

use super::monomial::IndexSet;

/// Value given to one Cayley-Klein parameter `j_k`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum CkValue {
    /// `j_k = 1`.
    Unit,
    /// Pimenov nilpotent unit, `ι_k² = 0`.
    Nil,
    /// `j_k = i`.
    Imag,
    /// Kept as a free symbol.
    Formal,
}

impl CkValue {
    pub fn name(self) -> &'static str {
        match self {
            CkValue::Unit => "unit",
            CkValue::Nil => "nil",
            CkValue::Imag => "im",
            CkValue::Formal => "formal",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "unit" => Some(CkValue::Unit),
            "nil" => Some(CkValue::Nil),
            "im" => Some(CkValue::Imag),
            "formal" => Some(CkValue::Formal),
            _ => None,
        }
    }
}

impl fmt::Display for CkValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Values of `j_1 .. j_{N-1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CkAssignment(Vec<CkValue>);

impl CkAssignment {
    pub fn new(values: Vec<CkValue>) -> Self {
        CkAssignment(values)
    }

    pub fn all(len: usize, v: CkValue) -> Self {
        CkAssignment(alloc::vec![v; len])
    }

    /// Nilpotent on `nil`, unit elsewhere.
    pub fn nilpotent_on(len: usize, nil: IndexSet) -> Self {
        CkAssignment(
            (1..=len)
                .map(|k| if nil.contains(k) { CkValue::Nil } else { CkValue::Unit })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Value of `j_k` (1-based).
    pub fn get(&self, k: usize) -> CkValue {
        self.0[k - 1]
    }

    pub fn values(&self) -> &[CkValue] {
        &self.0
    }

    pub fn indices_with(&self, v: CkValue) -> IndexSet {
        IndexSet::from_indices((1..=self.len()).filter(|&k| self.get(k) == v))
    }

    /// The nilpotent set `S`.
    pub fn nilpotent_set(&self) -> IndexSet {
        self.indices_with(CkValue::Nil)
    }

    /// True when some parameters are nilpotent and others imaginary, a case
    /// the contraction rules do not cover.
    pub fn mixes_nil_and_imag(&self) -> bool {
        !self.nilpotent_set().is_empty() && !self.indices_with(CkValue::Imag).is_empty()
    }
}
