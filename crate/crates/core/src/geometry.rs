//! Axis-parallel rectangles with exact coordinates and the transparent
//! visibility predicates defined on them.
//!
//! Visibility is decided on *open* projections: two rectangles see each other
//! horizontally iff their open y-intervals intersect, vertically iff their
//! open x-intervals intersect. Nothing blocks a sight line.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::coord::Coord;
use crate::error::{Error, Result};

/// Direction of a sight line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Axis {
    /// Horizontal sight line; decided by the y-projections.
    H,
    /// Vertical sight line; decided by the x-projections.
    V,
}

impl Axis {
    pub fn other(self) -> Axis {
        match self {
            Axis::H => Axis::V,
            Axis::V => Axis::H,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// Interiors pairwise disjoint; boundary contact allowed.
    Disjoint,
    /// Rectangles may overlap or coincide.
    Intersecting,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Vertical,
    Horizontal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Coverage {
    Entire,
    Partial,
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rect {
    id: String,
    x_lo: Coord,
    x_hi: Coord,
    y_lo: Coord,
    y_hi: Coord,
}

fn open_overlap(a_lo: &Coord, a_hi: &Coord, b_lo: &Coord, b_hi: &Coord) -> bool {
    a_lo < b_hi && b_lo < a_hi
}

impl Rect {
    /// Builds a rectangle `(x_lo, x_hi) × (y_lo, y_hi)`; both sides must have
    /// positive length.
    pub fn new(id: impl Into<String>, x_lo: Coord, x_hi: Coord, y_lo: Coord, y_hi: Coord) -> Result<Rect> {
        let id = id.into();
        if x_lo >= x_hi {
            return Err(Error::ZeroWidth { id });
        }
        if y_lo >= y_hi {
            return Err(Error::ZeroHeight { id });
        }
        Ok(Rect { id, x_lo, x_hi, y_lo, y_hi })
    }

    /// Integer-coordinate convenience constructor.
    pub fn from_ints(id: impl Into<String>, x_lo: i64, x_hi: i64, y_lo: i64, y_hi: i64) -> Result<Rect> {
        Rect::new(id, x_lo.into(), x_hi.into(), y_lo.into(), y_hi.into())
    }

    pub fn id(&self) -> &str {
        &self.id
    }
    pub fn x_lo(&self) -> &Coord {
        &self.x_lo
    }
    pub fn x_hi(&self) -> &Coord {
        &self.x_hi
    }
    pub fn y_lo(&self) -> &Coord {
        &self.y_lo
    }
    pub fn y_hi(&self) -> &Coord {
        &self.y_hi
    }

    /// The projection that decides visibility along `axis`: y for `H`, x for `V`.
    pub fn projection(&self, axis: Axis) -> (&Coord, &Coord) {
        match axis {
            Axis::H => (&self.y_lo, &self.y_hi),
            Axis::V => (&self.x_lo, &self.x_hi),
        }
    }

    pub fn with_id(&self, id: impl Into<String>) -> Rect {
        Rect { id: id.into(), ..self.clone() }
    }

    /// Mirror across the diagonal; horizontal and vertical visibility trade places.
    pub fn swap_axes(&self) -> Rect {
        Rect {
            id: self.id.clone(),
            x_lo: self.y_lo.clone(),
            x_hi: self.y_hi.clone(),
            y_lo: self.x_lo.clone(),
            y_hi: self.x_hi.clone(),
        }
    }

    pub fn translate(&self, dx: &Coord, dy: &Coord) -> Rect {
        Rect {
            id: self.id.clone(),
            x_lo: self.x_lo.add(dx),
            x_hi: self.x_hi.add(dx),
            y_lo: self.y_lo.add(dy),
            y_hi: self.y_hi.add(dy),
        }
    }
}

/// Whether `a` and `b` see each other along `axis` under transparency.
pub fn sees(a: &Rect, b: &Rect, axis: Axis) -> bool {
    let (a_lo, a_hi) = a.projection(axis);
    let (b_lo, b_hi) = b.projection(axis);
    open_overlap(a_lo, a_hi, b_lo, b_hi)
}

/// A pair sees along both axes exactly when the interiors overlap.
pub fn interiors_disjoint(a: &Rect, b: &Rect) -> bool {
    !(sees(a, b, Axis::H) && sees(a, b, Axis::V))
}

/// How `a`'s projection relates to `b`'s along the axis of sight: `V`
/// compares x-projections, `H` compares y-projections.
pub fn coverage(a: &Rect, b: &Rect, axis: Axis) -> Coverage {
    if !sees(a, b, axis) {
        return Coverage::None;
    }
    let (a_lo, a_hi) = a.projection(axis);
    let (b_lo, b_hi) = b.projection(axis);
    if b_lo <= a_lo && a_hi <= b_hi {
        Coverage::Entire
    } else {
        Coverage::Partial
    }
}

/// Open band between the facing sides of two consecutive reference rectangles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    pub orientation: Orientation,
    pub lo: Coord,
    pub hi: Coord,
    pub between: (String, String),
}

/// Both borders of the strip pass through the interior of `r`.
pub fn contains_strip(r: &Rect, s: &Strip) -> bool {
    let (lo, hi) = match s.orientation {
        Orientation::Vertical => (&r.x_lo, &r.x_hi),
        Orientation::Horizontal => (&r.y_lo, &r.y_hi),
    };
    lo < &s.lo && &s.hi < hi
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Layout {
    rects: Vec<Rect>,
    mode: Mode,
}

impl Layout {
    /// Ids must be distinct. Disjointness is *not* enforced here, so that an
    /// overlapping layout can still be inspected; see [`Layout::check_disjoint`].
    pub fn new(rects: Vec<Rect>, mode: Mode) -> Result<Layout> {
        let mut seen = HashSet::new();
        for r in &rects {
            if !seen.insert(r.id.as_str()) {
                return Err(Error::DuplicateId(r.id.clone()));
            }
        }
        Ok(Layout { rects, mode })
    }

    pub fn empty(mode: Mode) -> Layout {
        Layout { rects: Vec::new(), mode }
    }

    pub fn rects(&self) -> &[Rect] {
        &self.rects
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn len(&self) -> usize {
        self.rects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rects.is_empty()
    }

    pub fn get(&self, id: &str) -> Option<&Rect> {
        self.rects.iter().find(|r| r.id == id)
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.rects.iter().position(|r| r.id == id)
    }

    pub fn with_mode(mut self, mode: Mode) -> Layout {
        self.mode = mode;
        self
    }

    /// Appends a rectangle, rejecting a duplicate id.
    pub fn push(&mut self, rect: Rect) -> Result<()> {
        if self.get(&rect.id).is_some() {
            return Err(Error::DuplicateId(rect.id));
        }
        self.rects.push(rect);
        Ok(())
    }

    /// The layout with rectangle `id` deleted.
    pub fn without(&self, id: &str) -> Result<Layout> {
        let idx = self.index_of(id).ok_or_else(|| Error::UnknownId(id.to_string()))?;
        let mut rects = self.rects.clone();
        rects.remove(idx);
        Ok(Layout { rects, mode: self.mode })
    }

    /// Replaces the rectangle with the same id.
    pub fn replace(&self, rect: Rect) -> Result<Layout> {
        let idx = self.index_of(&rect.id).ok_or_else(|| Error::UnknownId(rect.id.clone()))?;
        let mut rects = self.rects.clone();
        rects[idx] = rect;
        Ok(Layout { rects, mode: self.mode })
    }

    pub fn swap_axes(&self) -> Layout {
        Layout { rects: self.rects.iter().map(Rect::swap_axes).collect(), mode: self.mode }
    }

    /// All index pairs `(i, j)`, `i < j`, whose interiors overlap.
    pub fn overlapping_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.rects.len() {
            for j in i + 1..self.rects.len() {
                if !interiors_disjoint(&self.rects[i], &self.rects[j]) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// In `Disjoint` mode, the first overlapping pair is an error.
    pub fn check_disjoint(&self) -> Result<()> {
        if self.mode == Mode::Intersecting {
            return Ok(());
        }
        match self.overlapping_pairs().first() {
            Some(&(i, j)) => Err(Error::OverlapViolation { a: self.rects[i].id.clone(), b: self.rects[j].id.clone() }),
            None => Ok(()),
        }
    }

    /// Replaces every coordinate by its rank among the distinct values on
    /// the same axis. Order type, and hence visibility, is unchanged.
    pub fn normalize(&self) -> Layout {
        let rank = |values: BTreeSet<&Coord>| -> HashMap<Coord, Coord> {
            values.into_iter().enumerate().map(|(i, v)| (v.clone(), Coord::int(i as i64))).collect()
        };
        let xs = rank(self.rects.iter().flat_map(|r| [&r.x_lo, &r.x_hi]).collect());
        let ys = rank(self.rects.iter().flat_map(|r| [&r.y_lo, &r.y_hi]).collect());
        let rects = self
            .rects
            .iter()
            .map(|r| Rect {
                id: r.id.clone(),
                x_lo: xs[&r.x_lo].clone(),
                x_hi: xs[&r.x_hi].clone(),
                y_lo: ys[&r.y_lo].clone(),
                y_hi: ys[&r.y_hi].clone(),
            })
            .collect();
        Layout { rects, mode: self.mode }
    }

    /// Smallest axis-parallel rectangle containing every rectangle.
    pub fn bounding_box(&self) -> Result<Rect> {
        let first = self.rects.first().ok_or(Error::EmptyLayout)?;
        let mut bb = first.with_id("bbox");
        for r in &self.rects[1..] {
            bb.x_lo = bb.x_lo.min(r.x_lo.clone());
            bb.x_hi = bb.x_hi.max(r.x_hi.clone());
            bb.y_lo = bb.y_lo.min(r.y_lo.clone());
            bb.y_hi = bb.y_hi.max(r.y_hi.clone());
        }
        Ok(bb)
    }

    /// Vertical strips between x-consecutive members of `ids`, followed by
    /// horizontal strips between y-consecutive members.
    pub fn strips(&self, ids: &[&str]) -> Result<Vec<Strip>> {
        let mut chosen = Vec::with_capacity(ids.len());
        for id in ids {
            chosen.push(self.get(id).ok_or_else(|| Error::UnknownId(id.to_string()))?);
        }
        let mut out = Vec::new();
        for orientation in [Orientation::Vertical, Orientation::Horizontal] {
            let axis = match orientation {
                Orientation::Vertical => Axis::V,
                Orientation::Horizontal => Axis::H,
            };
            let mut sorted = chosen.clone();
            sorted.sort_by(|a, b| a.projection(axis).cmp(&b.projection(axis)));
            for pair in sorted.windows(2) {
                let (_, a_hi) = pair[0].projection(axis);
                let (b_lo, _) = pair[1].projection(axis);
                if a_hi >= b_lo {
                    return Err(Error::NoStrip { orientation, a: pair[0].id.clone(), b: pair[1].id.clone() });
                }
                out.push(Strip {
                    orientation,
                    lo: a_hi.clone(),
                    hi: b_lo.clone(),
                    between: (pair[0].id.clone(), pair[1].id.clone()),
                });
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coord::c;

    fn r(id: &str, x0: &str, x1: &str, y0: &str, y1: &str) -> Rect {
        Rect::new(id, c(x0), c(x1), c(y0), c(y1)).unwrap()
    }

    #[test]
    fn abutting_squares_see_horizontally_only() {
        let a = r("a", "0", "1", "0", "1");
        let b = r("b", "2", "3", "0", "1");
        assert!(sees(&a, &b, Axis::H));
        assert!(!sees(&a, &b, Axis::V));
        assert!(sees(&a, &a, Axis::H) && sees(&a, &a, Axis::V));
    }

    #[test]
    fn corner_contact_is_not_visibility() {
        let a = r("a", "0", "1", "0", "1");
        let b = r("b", "1", "2", "1", "2");
        assert!(!sees(&a, &b, Axis::H));
        assert!(!sees(&a, &b, Axis::V));
    }

    #[test]
    fn disjointness() {
        let a = r("a", "0", "1", "0", "1");
        assert!(interiors_disjoint(&a, &r("b", "1", "2", "0", "1")));
        assert!(!interiors_disjoint(&a, &a));
        assert!(!interiors_disjoint(&r("p", "0", "2", "0", "2"), &r("q", "1", "3", "1", "3")));
    }

    #[test]
    fn degenerate_rects_rejected() {
        assert!(matches!(Rect::new("z", c("1"), c("1"), c("0"), c("1")), Err(Error::ZeroWidth { .. })));
        assert!(matches!(Rect::new("z", c("0"), c("1"), c("2"), c("1")), Err(Error::ZeroHeight { .. })));
    }

    #[test]
    fn duplicate_ids_rejected() {
        let a = r("a", "0", "1", "0", "1");
        assert!(matches!(Layout::new(vec![a.clone(), a], Mode::Disjoint), Err(Error::DuplicateId(_))));
    }

    #[test]
    fn normalize_single_rect() {
        let l = Layout::new(vec![r("a", "0.15", "3.7", "-1.1", "2.2")], Mode::Disjoint).unwrap();
        let n = l.normalize();
        assert_eq!(n.rects()[0], Rect::from_ints("a", 0, 1, 0, 1).unwrap());
        assert_eq!(n.normalize(), n);
    }

    #[test]
    fn bounding_boxes() {
        assert!(matches!(Layout::empty(Mode::Disjoint).bounding_box(), Err(Error::EmptyLayout)));
        let l = Layout::new(
            vec![Rect::from_ints("a", 0, 1, 0, 1).unwrap(), Rect::from_ints("b", 2, 3, 4, 5).unwrap()],
            Mode::Disjoint,
        )
        .unwrap();
        let bb = l.bounding_box().unwrap();
        assert_eq!((bb.x_lo(), bb.x_hi(), bb.y_lo(), bb.y_hi()), (&c("0"), &c("3"), &c("0"), &c("5")));
        let one = Layout::new(vec![Rect::from_ints("a", 0, 1, 0, 1).unwrap()], Mode::Disjoint).unwrap();
        assert_eq!(one.bounding_box().unwrap().with_id("a"), one.rects()[0]);
    }

    fn staircase() -> Layout {
        // Left-hand staircase of blue rectangles drawn for the K_{3,3,3} argument.
        Layout::new(
            vec![
                r("B1", "-7.85", "-6.35", "-3", "-1.5"),
                r("B2", "-5.6", "-4.1", "-1", "0.5"),
                r("B3", "-3.6", "-2.1", "1.25", "2.75"),
            ],
            Mode::Disjoint,
        )
        .unwrap()
    }

    #[test]
    fn staircase_strips() {
        let s = staircase().strips(&["B1", "B2", "B3"]).unwrap();
        let got: Vec<_> = s.iter().map(|s| (s.orientation, s.lo.clone(), s.hi.clone())).collect();
        assert_eq!(
            got,
            vec![
                (Orientation::Vertical, c("-6.35"), c("-5.6")),
                (Orientation::Vertical, c("-4.1"), c("-3.6")),
                (Orientation::Horizontal, c("-1.5"), c("-1")),
                (Orientation::Horizontal, c("0.5"), c("1.25")),
            ]
        );
        assert!(staircase().strips(&["B2"]).unwrap().is_empty());
    }

    #[test]
    fn abutting_pair_has_no_strip() {
        let l = Layout::new(
            vec![Rect::from_ints("a", 0, 1, 0, 1).unwrap(), Rect::from_ints("b", 1, 2, 1, 2).unwrap()],
            Mode::Disjoint,
        )
        .unwrap();
        assert!(matches!(l.strips(&["a", "b"]), Err(Error::NoStrip { .. })));
    }

    #[test]
    fn strip_containment() {
        let alpha1 = Strip {
            orientation: Orientation::Vertical,
            lo: c("-6.35"),
            hi: c("-5.6"),
            between: ("B1".into(), "B2".into()),
        };
        assert!(contains_strip(&r("R", "-7", "-3", "0", "1"), &alpha1));
        assert!(!contains_strip(&r("R", "-6.35", "-5.6", "0", "1"), &alpha1));
        assert!(!contains_strip(&r("R", "-6.2", "-5.8", "0", "1"), &alpha1));
    }

    #[test]
    fn coverage_cases() {
        let b = r("b", "0", "3", "0", "1");
        assert_eq!(coverage(&r("a", "1", "2", "5", "6"), &b, Axis::V), Coverage::Entire);
        assert_eq!(coverage(&r("a", "1", "4", "5", "6"), &b, Axis::V), Coverage::Partial);
        assert_eq!(coverage(&r("a", "4", "5", "5", "6"), &b, Axis::V), Coverage::None);
        assert_eq!(coverage(&r("a", "4", "5", "0.2", "0.8"), &b, Axis::H), Coverage::Entire);
    }
}
