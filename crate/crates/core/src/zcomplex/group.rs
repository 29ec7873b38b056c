use std::fmt;

/// An element of `(Z₂)^m` stored as a bit mask; bit `i` is the generator
/// `e_i` attached to facet `i`. The group law is XOR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElement(pub u32);

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement(0);

    pub fn generator(i: usize) -> GroupElement {
        GroupElement(1 << i)
    }

    /// `None` unless `bits` fits in `m` coordinates.
    pub fn new(bits: u32, m: usize) -> Option<GroupElement> {
        (m >= 32 || bits >> m == 0).then_some(GroupElement(bits))
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn has(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
}

// the group is (Z₂)^m, so addition is XOR
impl std::ops::Add for GroupElement {
    type Output = GroupElement;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: GroupElement) -> GroupElement {
        GroupElement(self.0 ^ rhs.0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:b}", self.0)
    }
}

/// Mask of the subgroup generated by `e_i` for `i` in `facets`.
pub fn subgroup_mask(facets: &[usize]) -> u32 {
    facets.iter().fold(0, |acc, &i| acc | 1 << i)
}
