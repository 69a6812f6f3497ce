//! Integer coordinates on the honeycomb lattice.
//!
//! Points are `a·u + b·v` on the triangular lattice spanned by
//! `u = (1, 0)` and `v = (1/2, √3/2)`. Points with `a ≡ b (mod 3)` are
//! hexagon centers; the rest are honeycomb vertices, split into two classes
//! by `(a − b) mod 3`, which is also the bipartition.

use num_rational::Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub a: i64,
    pub b: i64,
}

const CLASS_ONE_STEPS: [(i64, i64); 3] = [(1, 0), (-1, 1), (0, -1)];
const CLASS_TWO_STEPS: [(i64, i64); 3] = [(-1, 0), (1, -1), (0, 1)];

impl LatticePoint {
    pub const fn new(a: i64, b: i64) -> Self {
        LatticePoint { a, b }
    }

    /// `1` or `2` for honeycomb vertices, `0` for hexagon centers.
    pub fn class(self) -> i64 {
        (self.a - self.b).rem_euclid(3)
    }

    pub fn is_vertex(self) -> bool {
        self.class() != 0
    }

    /// The three honeycomb neighbors.
    ///
    /// # Panics
    /// If `self` is a hexagon center.
    pub fn neighbors(self) -> [LatticePoint; 3] {
        let steps = match self.class() {
            1 => CLASS_ONE_STEPS,
            2 => CLASS_TWO_STEPS,
            _ => panic!("{self:?} is a hexagon center, not a honeycomb vertex"),
        };
        steps.map(|(da, db)| self.offset(da, db))
    }

    pub fn is_adjacent(self, other: LatticePoint) -> bool {
        self.neighbors().contains(&other)
    }

    pub const fn offset(self, da: i64, db: i64) -> Self {
        LatticePoint { a: self.a + da, b: self.b + db }
    }

    /// Rotation by 60° counterclockwise about the origin (a hexagon center).
    pub const fn rotate60(self) -> Self {
        LatticePoint { a: -self.b, b: self.a + self.b }
    }

    pub fn rotate60_times(self, times: u32) -> Self {
        (0..times % 6).fold(self, |p, _| p.rotate60())
    }

    /// Half-turn about the origin.
    pub const fn negate(self) -> Self {
        LatticePoint { a: -self.a, b: -self.b }
    }

    /// Affine plane coordinates `(a + b/2, b)`; the second axis is measured
    /// in units of `√3/2`, which keeps everything rational.
    pub fn embed(self) -> (Rational64, Rational64) {
        (Rational64::new(2 * self.a + self.b, 2), Rational64::from_integer(self.b))
    }
}

/// Vertex `index` of zigzag line `line`.
///
/// Lines run in direction `(2, −1)`; even positions are class-2 vertices
/// whose third neighbor is up (`+(0, 1)`), odd positions are class-1
/// vertices whose third neighbor is down (`+(0, −1)`). Consecutive lines
/// are offset by `(−1, 2)`, so position `2m` of line `r` is joined to
/// position `2m + 1` of line `r + 1`.
pub fn line_point(line: u32, index: u32) -> LatticePoint {
    let (r, i) = (i64::from(line), i64::from(index));
    let start = LatticePoint::new(-1 - r, 2 * r);
    let base = start.offset(2 * (i / 2), -(i / 2));
    if i % 2 == 1 {
        base.offset(1, -1)
    } else {
        base
    }
}
