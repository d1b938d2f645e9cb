use core::fmt;

/// Members of a ground set of at most 64 elements, one bit per index.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemberSet(pub u64);

pub const MAX_MEMBERS: usize = 64;

impl MemberSet {
    pub const EMPTY: MemberSet = MemberSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_MEMBERS);
        if n == MAX_MEMBERS {
            MemberSet(u64::MAX)
        } else {
            MemberSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        MemberSet(1u64 << i)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        it.into_iter().fold(Self::EMPTY, |s, i| s.with(i))
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_MEMBERS && self.0 >> i & 1 == 1
    }

    #[must_use]
    pub fn with(self, i: usize) -> Self {
        MemberSet(self.0 | 1u64 << i)
    }

    #[must_use]
    pub fn without(self, i: usize) -> Self {
        MemberSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        MemberSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        MemberSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        MemberSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl fmt::Debug for MemberSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for MemberSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::from_indices(iter)
    }
}

/// Ascending member indices.
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}
