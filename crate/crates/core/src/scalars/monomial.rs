use core::fmt;

/// Largest number of Cayley-Klein parameters a monomial can carry (N ≤ 9).
pub const MAX_PARAMS: usize = 8;

/// Set of parameter indices `1..=MAX_PARAMS`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        let mut s = IndexSet(0);
        for k in it {
            s.insert(k);
        }
        s
    }

    pub fn insert(&mut self, k: usize) {
        assert!((1..=MAX_PARAMS).contains(&k), "parameter index {k} out of range");
        self.0 |= 1 << k;
    }

    pub fn contains(self, k: usize) -> bool {
        k < 32 && self.0 & (1 << k) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn union(self, o: IndexSet) -> IndexSet {
        IndexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: IndexSet) -> IndexSet {
        IndexSet(self.0 & o.0)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (1..=MAX_PARAMS).filter(move |&k| self.contains(k))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Monomial `j_1^{β_1} ... j_L^{β_L}` in the Cayley-Klein parameters.
///
/// The length `L` is part of the value: monomials from contexts with a
/// different number of parameters never compare equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamMonomial {
    len: u8,
    exps: [u16; MAX_PARAMS],
}

impl ParamMonomial {
    pub fn one(len: usize) -> Self {
        assert!(len <= MAX_PARAMS, "at most {MAX_PARAMS} parameters supported");
        ParamMonomial {
            len: len as u8,
            exps: [0; MAX_PARAMS],
        }
    }

    /// The single parameter `j_k` (1-based).
    pub fn param(len: usize, k: usize) -> Self {
        let mut m = Self::one(len);
        m.set(k, 1);
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut m = Self::one(exps.len());
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    /// Squarefree monomial with the given support.
    pub fn from_set(len: usize, set: IndexSet) -> Self {
        let mut m = Self::one(len);
        for k in set.iter().filter(|&k| k <= len) {
            m.set(k, 1);
        }
        m
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Exponent of `j_k` (1-based).
    pub fn exp(&self, k: usize) -> u16 {
        assert!(k >= 1 && k <= self.len(), "parameter index {k} out of range");
        self.exps[k - 1]
    }

    pub fn set(&mut self, k: usize, e: u16) {
        assert!(k >= 1 && k <= self.len(), "parameter index {k} out of range");
        self.exps[k - 1] = e;
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.len()]
    }

    pub fn is_one(&self) -> bool {
        self.exps().iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.exps().iter().map(|&e| e as u32).sum()
    }

    pub fn support(&self) -> IndexSet {
        IndexSet::from_indices((1..=self.len()).filter(|&k| self.exp(k) > 0))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.len, o.len, "monomials from different parameter contexts");
        let mut r = *self;
        for k in 0..self.len() {
            r.exps[k] += o.exps[k];
        }
        r
    }

    pub fn pow(&self, e: u16) -> Self {
        let mut r = *self;
        for k in 0..self.len() {
            r.exps[k] *= e;
        }
        r
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.len == o.len && (0..self.len()).all(|k| self.exps[k] <= o.exps[k])
    }

    /// `self / d` when `d` divides `self`.
    pub fn checked_div(&self, d: &Self) -> Option<Self> {
        if !d.divides(self) {
            return None;
        }
        let mut r = *self;
        for k in 0..self.len() {
            r.exps[k] -= d.exps[k];
        }
        Some(r)
    }

    /// Componentwise minimum.
    pub fn gcd(&self, o: &Self) -> Self {
        assert_eq!(self.len, o.len, "monomials from different parameter contexts");
        let mut r = *self;
        for k in 0..self.len() {
            r.exps[k] = r.exps[k].min(o.exps[k]);
        }
        r
    }

    /// Keeps only exponents on `set`, zeroing the rest.
    pub fn restrict(&self, set: IndexSet) -> Self {
        let mut r = *self;
        for k in 1..=self.len() {
            if !set.contains(k) {
                r.exps[k - 1] = 0;
            }
        }
        r
    }

    /// Largest exponent over indices in `set`.
    pub fn max_exp_on(&self, set: IndexSet) -> u16 {
        (1..=self.len())
            .filter(|&k| set.contains(k))
            .map(|k| self.exp(k))
            .max()
            .unwrap_or(0)
    }

    /// Image under the relabelling `k ↦ len + 1 - k`.
    pub fn reversed(&self) -> Self {
        let mut r = Self::one(self.len());
        for k in 1..=self.len() {
            r.set(self.len() + 1 - k, self.exp(k));
        }
        r
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for k in 1..=self.len() {
            let e = self.exp(k);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "j{}^{}", k, e)?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

/// Basis element `t^m v^p j^β` of the scalar ring.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ScalarMonomial {
    pub t: i32,
    pub v: u32,
    pub beta: ParamMonomial,
}

impl ScalarMonomial {
    pub fn one(len: usize) -> Self {
        ScalarMonomial {
            t: 0,
            v: 0,
            beta: ParamMonomial::one(len),
        }
    }

    pub fn is_one(&self) -> bool {
        self.t == 0 && self.v == 0 && self.beta.is_one()
    }

    pub fn mul(&self, o: &Self) -> Self {
        ScalarMonomial {
            t: self.t + o.t,
            v: self.v + o.v,
            beta: self.beta.mul(&o.beta),
        }
    }
}

impl fmt::Display for ScalarMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = alloc::vec::Vec::new();
        if self.t != 0 {
            parts.push(alloc::format!("t^{}", self.t));
        }
        if self.v != 0 {
            parts.push(alloc::format!("v^{}", self.v));
        }
        if !self.beta.is_one() {
            parts.push(alloc::format!("{}", self.beta));
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let a = ParamMonomial::from_exps(&[2, 1, 0]);
        let b = ParamMonomial::from_exps(&[1, 0, 0]);
        assert_eq!(a.checked_div(&b), Some(ParamMonomial::from_exps(&[1, 1, 0])));
        assert_eq!(b.checked_div(&a), None);
        assert_eq!(
            a.gcd(&ParamMonomial::from_exps(&[0, 3, 1])),
            ParamMonomial::from_exps(&[0, 1, 0])
        );
    }

    #[test]
    fn index_set_roundtrip() {
        let s = IndexSet::from_indices([1, 3]);
        assert!(s.contains(1) && !s.contains(2) && s.contains(3));
        assert_eq!(s.iter().collect::<alloc::vec::Vec<_>>(), [1, 3]);
        assert_eq!(ParamMonomial::from_set(3, s).exps(), &[1, 0, 1]);
    }

    #[test]
    fn reversal_is_involution() {
        let a = ParamMonomial::from_exps(&[2, 0, 1, 4]);
        assert_eq!(a.reversed().exps(), &[4, 1, 0, 2]);
        assert_eq!(a.reversed().reversed(), a);
    }
}
