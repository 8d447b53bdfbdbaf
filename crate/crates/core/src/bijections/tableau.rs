//! Young shapes and standard tableaux with RSK row insertion.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("entry {0} is already present")]
    DuplicateEntry(u32),
    #[error("row {0} does not end in a removable corner")]
    NotACorner(usize),
    #[error("rows do not form a standard tableau")]
    NotStandard,
}

/// Row lengths, weakly decreasing, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Shape(Vec<u32>);

impl Shape {
    pub fn empty() -> Self {
        Shape(Vec::new())
    }

    /// Trims trailing zeros; `None` if the rows increase somewhere.
    pub fn new(mut rows: Vec<u32>) -> Option<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        rows.windows(2).all(|w| w[0] >= w[1]).then_some(Shape(rows))
    }

    pub fn rows(&self) -> &[u32] {
        &self.0
    }

    pub fn row_count(&self) -> usize {
        self.0.len()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn row(&self, r: usize) -> u32 {
        self.0.get(r).copied().unwrap_or(0)
    }

    /// Adds a square at the end of row `r` (0-based) if the result is a shape.
    pub fn add(&self, r: usize) -> Option<Shape> {
        if r > self.0.len() || (r > 0 && self.row(r - 1) == self.row(r)) {
            return None;
        }
        let mut rows = self.0.clone();
        if r == rows.len() {
            rows.push(1);
        } else {
            rows[r] += 1;
        }
        Some(Shape(rows))
    }

    /// Removes the last square of row `r` if it is a corner.
    pub fn remove(&self, r: usize) -> Option<Shape> {
        if r >= self.0.len() || self.row(r + 1) == self.row(r) {
            return None;
        }
        let mut rows = self.0.clone();
        rows[r] -= 1;
        if rows[r] == 0 {
            rows.pop();
        }
        Some(Shape(rows))
    }

    /// The single row where `other` differs from `self` by one square.
    pub fn difference(&self, other: &Shape) -> Option<ShapeStep> {
        if self == other {
            return Some(ShapeStep::Stay);
        }
        let len = self.0.len().max(other.0.len());
        let diffs: Vec<usize> = (0..len).filter(|&r| self.row(r) != other.row(r)).collect();
        let [r] = diffs[..] else { return None };
        match other.row(r) as i64 - self.row(r) as i64 {
            1 => Some(ShapeStep::Add(r)),
            -1 => Some(ShapeStep::Remove(r)),
            _ => None,
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("()");
        }
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// One half-step of a shape sequence; rows are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeStep {
    Stay,
    Add(usize),
    Remove(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new() -> Self {
        Self::default()
    }

    /// Checks that rows and columns strictly increase.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self, TableauError> {
        let mut all: Vec<u32> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        let distinct = all.windows(2).all(|w| w[0] != w[1]);
        let shaped = rows.iter().all(|r| !r.is_empty()) && rows.windows(2).all(|w| w[0].len() >= w[1].len());
        let rows_inc = rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]));
        let cols_inc = rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| above < below));
        if distinct && shaped && rows_inc && cols_inc {
            Ok(StandardTableau { rows })
        } else {
            Err(TableauError::NotStandard)
        }
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Shape {
        Shape(self.rows.iter().map(|r| r.len() as u32).collect())
    }

    pub fn contains(&self, x: u32) -> bool {
        self.rows.iter().any(|r| r.contains(&x))
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Row-inserts `x`, bumping the leftmost larger entry of each row into the
    /// next. Returns the row that gained a square.
    pub fn insert(&mut self, x: u32) -> Result<usize, TableauError> {
        if self.contains(x) {
            return Err(TableauError::DuplicateEntry(x));
        }
        let mut carry = x;
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&e| e > carry) {
                Some(c) => carry = std::mem::replace(&mut row[c], carry),
                None => {
                    row.push(carry);
                    return Ok(r);
                }
            }
        }
        self.rows.push(vec![carry]);
        Ok(self.rows.len() - 1)
    }

    pub fn rsk_insert(&self, x: u32) -> Result<StandardTableau, TableauError> {
        let mut t = self.clone();
        t.insert(x)?;
        Ok(t)
    }

    /// Removes the last square of row `r` and reverse-bumps it upward: in
    /// each row above, it replaces the rightmost smaller entry. Returns the
    /// entry pushed out of the first row.
    pub fn remove_corner(&mut self, r: usize) -> Result<u32, TableauError> {
        if self.shape().remove(r).is_none() {
            return Err(TableauError::NotACorner(r));
        }
        let mut carry = self.rows[r].pop().expect("corner row is nonempty");
        if self.rows[r].is_empty() {
            self.rows.pop();
        }
        for row in self.rows[..r].iter_mut().rev() {
            let c = row
                .iter()
                .rposition(|&e| e < carry)
                .expect("standard tableau has a smaller entry above");
            carry = std::mem::replace(&mut row[c], carry);
        }
        Ok(carry)
    }

    pub fn reverse_bump(&self, r: usize) -> Result<(StandardTableau, u32), TableauError> {
        let mut t = self.clone();
        let exit = t.remove_corner(r)?;
        Ok((t, exit))
    }

    /// Puts `x` into a new square at the end of row `r`. `x` must exceed
    /// every entry so the tableau stays standard.
    pub(crate) fn place_max(&mut self, r: usize, x: u32) -> Option<()> {
        if self.shape().add(r).is_none() || self.rows.iter().flatten().any(|&e| e >= x) {
            return None;
        }
        if r == self.rows.len() {
            self.rows.push(vec![x]);
        } else {
            self.rows[r].push(x);
        }
        Some(())
    }

    /// Deletes the largest entry, which always sits in a corner.
    pub(crate) fn remove_max(&mut self, x: u32) -> Option<usize> {
        let r = self.rows.iter().position(|row| row.last() == Some(&x))?;
        if self.rows.iter().flatten().any(|&e| e > x) {
            return None;
        }
        self.rows[r].pop();
        if self.rows[r].is_empty() {
            self.rows.remove(r);
        }
        Some(r)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;

    fn t(rows: &[&[u32]]) -> StandardTableau {
        StandardTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion() {
        assert_eq!(StandardTableau::new().rsk_insert(5).unwrap(), t(&[&[5]]));
        assert_eq!(t(&[&[2, 3]]).rsk_insert(1).unwrap(), t(&[&[1, 3], &[2]]));
        let mut acc = StandardTableau::new();
        for x in [5, 2, 4, 1, 6, 3] {
            acc.insert(x).unwrap();
        }
        assert_eq!(acc, t(&[&[1, 3, 6], &[2, 4], &[5]]));
        assert_eq!(t(&[&[2, 3]]).rsk_insert(3), Err(TableauError::DuplicateEntry(3)));
    }

    #[test]
    fn reverse_bumping() {
        assert_eq!(t(&[&[1, 3], &[2]]).reverse_bump(1).unwrap(), (t(&[&[2, 3]]), 1));
        assert_eq!(t(&[&[5]]).reverse_bump(0).unwrap(), (StandardTableau::new(), 5));
        let square = t(&[&[1, 4], &[2, 5]]);
        assert_eq!(square.reverse_bump(0), Err(TableauError::NotACorner(0)));
        assert_eq!(t(&[&[1, 4, 6], &[2, 5]]).reverse_bump(2), Err(TableauError::NotACorner(2)));
    }

    #[test]
    fn rejects_non_standard() {
        assert!(StandardTableau::from_rows(vec![vec![2, 1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1, 2], vec![1]]).is_err());
        assert!(StandardTableau::from_rows(vec![vec![1], vec![2, 3]]).is_err());
    }

    #[test]
    fn shape_moves() {
        let s = Shape::new(vec![2, 1, 0]).unwrap();
        assert_eq!(s.rows(), &[2, 1]);
        assert_eq!(s.add(1), Shape::new(vec![2, 2]));
        assert_eq!(Shape::new(vec![2, 2]).unwrap().add(1), None);
        assert_eq!(s.add(2), Shape::new(vec![2, 1, 1]));
        assert_eq!(s.remove(0), Shape::new(vec![1, 1]));
        assert_eq!(Shape::new(vec![1, 1]).unwrap().remove(0), None);
        assert!(Shape::new(vec![1, 2]).is_none());
        assert_eq!(s.difference(&Shape::new(vec![2]).unwrap()), Some(ShapeStep::Remove(1)));
        assert_eq!(s.difference(&Shape::new(vec![3]).unwrap()), None);
    }

    proptest! {
        #[test]
        fn reverse_bump_inverts_insert(values in proptest::collection::hash_set(0u32..60, 1..20)) {
            let values: Vec<u32> = values.into_iter().collect();
            let (last, rest) = values.split_last().unwrap();
            let mut base = StandardTableau::new();
            for &x in rest {
                base.insert(x).unwrap();
            }
            let mut grown = base.clone();
            let row = grown.insert(*last).unwrap();
            prop_assert_eq!(grown.shape().size(), base.shape().size() + 1);
            prop_assert!(StandardTableau::from_rows(grown.rows().to_vec()).is_ok());
            let (back, exit) = grown.reverse_bump(row).unwrap();
            prop_assert_eq!(exit, *last);
            prop_assert_eq!(back, base);
        }
    }
}
