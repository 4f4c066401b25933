//! Fixed-width bit set over color ids `0..width`.

/// A subset of the colors `0..width`, stored as a bit vector.
///
/// The width is fixed at construction and all set operations are interpreted
/// relative to it (e.g. [`ColorSet::complement`] flips exactly the first
/// `width` bits). The cardinality is cached so `len` is O(1).
#[derive(Clone, Debug)]
pub struct ColorSet {
    width: usize,
    blocks: Vec<u64>,
    len: usize,
}

impl ColorSet {
    /// The empty subset of `0..width`.
    pub fn empty(width: usize) -> Self {
        ColorSet {
            width,
            blocks: vec![0; width.div_ceil(64)],
            len: 0,
        }
    }

    /// The full subset `{0, 1, ..., width - 1}`.
    pub fn full(width: usize) -> Self {
        let mut set = ColorSet::empty(width);
        for block in set.blocks.iter_mut() {
            *block = !0;
        }
        set.clear_tail();
        set.len = width;
        set
    }

    /// Builds a set from an iterator of color ids. Panics on out-of-range ids.
    pub fn from_members(width: usize, members: impl IntoIterator<Item = usize>) -> Self {
        let mut set = ColorSet::empty(width);
        for color in members {
            set.insert(color);
        }
        set
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Number of colors in the set.
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, color: usize) -> bool {
        assert!(color < self.width, "color {color} out of range 0..{}", self.width);
        self.blocks[color / 64] >> (color % 64) & 1 == 1
    }

    /// Adds `color`; returns true if it was not already present.
    pub fn insert(&mut self, color: usize) -> bool {
        assert!(color < self.width, "color {color} out of range 0..{}", self.width);
        let (block, bit) = (color / 64, 1u64 << (color % 64));
        let fresh = self.blocks[block] & bit == 0;
        self.blocks[block] |= bit;
        self.len += fresh as usize;
        fresh
    }

    /// Removes `color`; returns true if it was present.
    pub fn remove(&mut self, color: usize) -> bool {
        assert!(color < self.width, "color {color} out of range 0..{}", self.width);
        let (block, bit) = (color / 64, 1u64 << (color % 64));
        let present = self.blocks[block] & bit != 0;
        self.blocks[block] &= !bit;
        self.len -= present as usize;
        present
    }

    /// The set `{0..width} \ self`.
    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for block in out.blocks.iter_mut() {
            *block = !*block;
        }
        out.clear_tail();
        out.len = self.width - self.len;
        out
    }

    /// `|self Δ other|`, the number of colors in exactly one of the two sets.
    ///
    /// Panics if the widths differ: symmetric difference is only meaningful
    /// against the same color universe.
    pub fn symmetric_difference_len(&self, other: &Self) -> usize {
        assert_eq!(self.width, other.width, "color sets have different widths");
        self.blocks
            .iter()
            .zip(&other.blocks)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Iterates the member colors in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().enumerate().flat_map(|(i, &block)| {
            let mut bits = block;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let low = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i * 64 + low)
            })
        })
    }

    /// The member colors in ascending order.
    pub fn members(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn clear_tail(&mut self) {
        let tail = self.width % 64;
        if tail != 0 {
            if let Some(last) = self.blocks.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }
}

impl PartialEq for ColorSet {
    fn eq(&self, other: &Self) -> bool {
        self.width == other.width && self.blocks == other.blocks
    }
}

impl Eq for ColorSet {}

impl std::hash::Hash for ColorSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.width.hash(state);
        self.blocks.hash(state);
    }
}
