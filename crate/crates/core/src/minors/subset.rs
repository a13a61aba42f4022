use std::fmt;

use super::MinorsError;

/// A subset of `[n] = {1..n}` stored as a bitmask (element `i` is bit `i-1`).
///
/// Orders by mask value, which is colexicographic order on subsets of equal size.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    mask: u64,
    n: u8,
}

pub const MAX_N: usize = 63;

impl Subset {
    pub fn new(n: usize, elems: &[usize]) -> Result<Self, MinorsError> {
        if n > MAX_N {
            return Err(MinorsError::Malformed(format!("ground set size {n} exceeds {MAX_N}")));
        }
        let mut mask = 0u64;
        for &e in elems {
            if e == 0 || e > n {
                return Err(MinorsError::Malformed(format!("element {e} outside [1,{n}]")));
            }
            if mask & (1 << (e - 1)) != 0 {
                return Err(MinorsError::Malformed(format!("repeated element {e}")));
            }
            mask |= 1 << (e - 1);
        }
        Ok(Subset { mask, n: n as u8 })
    }

    /// Panicking constructor for literals in code and tests.
    pub fn of(n: usize, elems: &[usize]) -> Self {
        Self::new(n, elems).expect("valid subset literal")
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n <= MAX_N && (n == 64 || mask >> n == 0));
        Subset { mask, n: n as u8 }
    }

    /// The cyclic interval `{a, a+1, …, a+len-1}` taken mod n (1-based).
    pub fn interval(n: usize, a: usize, len: usize) -> Self {
        let elems: Vec<usize> = (0..len).map(|t| (a - 1 + t) % n + 1).collect();
        Self::of(n, &elems)
    }

    pub fn mask(&self) -> u64 {
        self.mask
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i <= self.n() && self.mask >> (i - 1) & 1 == 1
    }

    /// Elements in increasing order (1-based).
    pub fn elems(&self) -> Vec<usize> {
        let mut v = Vec::with_capacity(self.len());
        let mut m = self.mask;
        while m != 0 {
            let t = m.trailing_zeros() as usize;
            v.push(t + 1);
            m &= m - 1;
        }
        v
    }

    pub fn minus(&self, o: &Subset) -> Subset {
        Subset { mask: self.mask & !o.mask, n: self.n }
    }

    pub fn union(&self, o: &Subset) -> Subset {
        Subset { mask: self.mask | o.mask, n: self.n }
    }

    pub fn intersect(&self, o: &Subset) -> Subset {
        Subset { mask: self.mask & o.mask, n: self.n }
    }

    pub fn with(&self, i: usize) -> Subset {
        Subset { mask: self.mask | 1 << (i - 1), n: self.n }
    }

    pub fn without(&self, i: usize) -> Subset {
        Subset { mask: self.mask & !(1 << (i - 1)), n: self.n }
    }

    pub fn complement(&self) -> Subset {
        Subset { mask: !self.mask & full_mask(self.n()), n: self.n }
    }

    /// `|self ∩ [a, b]|` for `1 ≤ a ≤ b ≤ n`.
    pub fn count_in(&self, a: usize, b: usize) -> usize {
        (self.mask & range_mask(a, b)).count_ones() as usize
    }

    /// Image under `i ↦ i + s (mod n)`.
    pub fn rotate(&self, s: usize) -> Subset {
        let n = self.n();
        let s = s % n;
        if s == 0 {
            return *self;
        }
        let m = ((self.mask << s) | (self.mask >> (n - s))) & full_mask(n);
        Subset { mask: m, n: self.n }
    }

    pub fn parse(s: &str, n: usize) -> Result<Self, MinorsError> {
        let t = s.trim();
        let inner = t
            .strip_prefix('{')
            .and_then(|x| x.strip_suffix('}'))
            .ok_or_else(|| MinorsError::Malformed(format!("subset {s:?} must look like {{1,3,5}}")))?;
        let mut elems = Vec::new();
        for part in inner.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            elems.push(part.parse::<usize>().map_err(|_| MinorsError::Malformed(format!("bad element {part:?}")))?);
        }
        Self::new(n, &elems)
    }

    /// Parses `{…}` and infers the ground set size as the largest element.
    pub fn parse_infer(s: &str) -> Result<Self, MinorsError> {
        let probe = Self::parse(s, MAX_N)?;
        let n = probe.elems().last().copied().unwrap_or(0);
        Ok(Self::from_mask(n, probe.mask))
    }

    pub fn with_n(&self, n: usize) -> Result<Self, MinorsError> {
        if n > MAX_N || (n < 64 && self.mask >> n != 0) {
            return Err(MinorsError::Malformed(format!("{self} does not fit in [{n}]")));
        }
        Ok(Subset { mask: self.mask, n: n as u8 })
    }

    /// Compact label such as `1236` (elements ≥ 10 are separated by spaces).
    pub fn compact(&self) -> String {
        let e = self.elems();
        if e.iter().all(|&x| x < 10) {
            e.iter().map(|x| x.to_string()).collect()
        } else {
            e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
    }
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) fn range_mask(a: usize, b: usize) -> u64 {
    if a > b {
        return 0;
    }
    full_mask(b) & !full_mask(a - 1)
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e: Vec<String> = self.elems().iter().map(|x| x.to_string()).collect();
        write!(f, "{{{}}}", e.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All k-subsets of [n] in increasing mask (colex) order.
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Subset> {
    let first = if k == 0 { 0 } else { full_mask(k) };
    let done = k > n;
    let limit = full_mask(n);
    std::iter::successors(if done { None } else { Some(first) }, move |&m| {
        if m == 0 {
            return None;
        }
        // Gosper's hack
        let c = m & m.wrapping_neg();
        let r = m + c;
        let next = (((r ^ m) >> 2) / c) | r;
        if r == 0 || next > limit || next & !limit != 0 {
            None
        } else {
            Some(next)
        }
    })
    .map(move |m| Subset::from_mask(n, m))
}

/// Binomial coefficient as u64 (small arguments).
pub fn binom(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) as u64 / (i + 1) as u64;
    }
    r
}

/// Dense index of a k-subset in colex order, inverse of `k_subsets` enumeration.
pub fn colex_rank(s: &Subset) -> usize {
    s.elems().iter().enumerate().map(|(i, &e)| binom(e - 1, i + 1) as usize).sum()
}
