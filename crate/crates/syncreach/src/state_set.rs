use std::fmt;

/// A subset of the states `{0, …, n-1}` over a fixed universe of size `n`,
/// stored as a bitmask. Membership, cardinality and complement are O(1);
/// iteration is O(|S|).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet {
    n: usize,
    bits: u64,
}

impl StateSet {
    /// Largest supported universe.
    pub const MAX_UNIVERSE: usize = 64;

    fn check_universe(n: usize) {
        assert!(
            (1..=Self::MAX_UNIVERSE).contains(&n),
            "state set universe must be in 1..={}, got {}",
            Self::MAX_UNIVERSE,
            n
        );
    }

    fn universe_mask(n: usize) -> u64 {
        if n == 64 {
            u64::MAX
        } else {
            (1u64 << n) - 1
        }
    }

    pub fn empty(n: usize) -> Self {
        Self::check_universe(n);
        StateSet { n, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        Self::check_universe(n);
        StateSet {
            n,
            bits: Self::universe_mask(n),
        }
    }

    pub fn singleton(n: usize, q: usize) -> Self {
        Self::check_universe(n);
        assert!(q < n, "state {} out of range for universe {}", q, n);
        StateSet { n, bits: 1 << q }
    }

    /// Builds a set from raw bits; bits outside the universe are masked off.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        Self::check_universe(n);
        StateSet {
            n,
            bits: bits & Self::universe_mask(n),
        }
    }

    pub fn from_states<I: IntoIterator<Item = usize>>(n: usize, states: I) -> Self {
        let mut s = Self::empty(n);
        for q in states {
            assert!(q < n, "state {} out of range for universe {}", q, n);
            s.bits |= 1 << q;
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_singleton(&self) -> bool {
        self.len() == 1
    }

    pub fn is_full(&self) -> bool {
        self.bits == Self::universe_mask(self.n)
    }

    pub fn contains(&self, q: usize) -> bool {
        q < self.n && self.bits & (1 << q) != 0
    }

    pub fn with(&self, q: usize) -> Self {
        assert!(q < self.n);
        StateSet {
            n: self.n,
            bits: self.bits | (1 << q),
        }
    }

    pub fn without(&self, q: usize) -> Self {
        assert!(q < self.n);
        StateSet {
            n: self.n,
            bits: self.bits & !(1 << q),
        }
    }

    pub fn complement(&self) -> Self {
        StateSet {
            n: self.n,
            bits: !self.bits & Self::universe_mask(self.n),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "universe mismatch");
        StateSet {
            n: self.n,
            bits: self.bits | other.bits,
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "universe mismatch");
        StateSet {
            n: self.n,
            bits: self.bits & other.bits,
        }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "universe mismatch");
        self.bits & !other.bits == 0
    }

    /// Smallest member, if any.
    pub fn min_state(&self) -> Option<usize> {
        if self.bits == 0 {
            None
        } else {
            Some(self.bits.trailing_zeros() as usize)
        }
    }

    /// Iterates members in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = usize> {
        let mut bits = self.bits;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let q = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(q)
            }
        })
    }

    /// All subsets of `{0, …, n-1}` with exactly `k` elements, in increasing
    /// bitmask order (Gosper's hack).
    pub fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = StateSet> {
        Self::check_universe(n);
        assert!(k <= n, "subset size {} exceeds universe {}", k, n);
        let limit: u128 = 1u128 << n;
        let mut current: Option<u64> = if k == 0 { Some(0) } else { Some((1u64 << k) - 1) };
        std::iter::from_fn(move || {
            let mask = current?;
            if (mask as u128) >= limit {
                current = None;
                return None;
            }
            let result = StateSet { n, bits: mask };
            if mask == 0 {
                current = None;
            } else {
                // next mask with the same popcount
                let u = mask & mask.wrapping_neg();
                let v = mask.wrapping_add(u);
                if v == 0 {
                    current = None;
                } else {
                    current = Some(v | (((v ^ mask) / u) >> 2));
                }
            }
            Some(result)
        })
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, q) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", q)?;
        }
        write!(f, "}}")
    }
}
