//! Quadrance geometry on F_q^m and circle-intersection counts in the plane.

use std::ops::{Add, Sub};

use crate::error::{Error, Result};

use super::prime::{FieldElement, FieldSpec};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<FieldElement>,
}

impl Point {
    pub fn new(coords: Vec<FieldElement>) -> Result<Self> {
        if coords.len() < 2 {
            return Err(Error::BadParameter("points need at least 2 coordinates".into()));
        }
        let q = coords[0].modulus();
        if coords.iter().any(|c| c.modulus() != q) {
            return Err(Error::BadParameter("coordinates from different fields".into()));
        }
        Ok(Point { coords })
    }

    pub fn from_values(field: FieldSpec, values: &[u64]) -> Result<Self> {
        Point::new(values.iter().map(|&v| field.elem(v)).collect())
    }

    pub fn coords(&self) -> &[FieldElement] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.coords[0].field()
    }

    /// Every point of F_q^m in codec order (coordinate 0 varies fastest).
    pub fn all(field: FieldSpec, m: usize) -> impl Iterator<Item = Point> {
        let q = field.q() as u64;
        let total = q.pow(m as u32);
        (0..total).map(move |mut idx| {
            let coords = (0..m)
                .map(|_| {
                    let c = field.elem(idx % q);
                    idx /= q;
                    c
                })
                .collect();
            Point { coords }
        })
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        Point {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| *a + *b).collect(),
        }
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        Point {
            coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| *a - *b).collect(),
        }
    }
}

/// Q(X, Y) = sum of (x_i - y_i)^2.
pub fn quadrance(x: &Point, y: &Point) -> Result<FieldElement> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch(x.dim(), y.dim()));
    }
    if x.field() != y.field() {
        return Err(Error::BadParameter("points over different fields".into()));
    }
    let zero = x.field().zero();
    Ok(x.coords
        .iter()
        .zip(&y.coords)
        .map(|(a, b)| (*a - *b) * (*a - *b))
        .fold(zero, |acc, t| acc + t))
}

/// C_k(center): every point at quadrance `k` from `center`, by exhaustive scan.
pub fn circle_points(center: &Point, k: FieldElement) -> Result<Vec<Point>> {
    if center.dim() != 2 {
        return Err(Error::DimensionMismatch(center.dim(), 2));
    }
    let mut out = Vec::new();
    for p in Point::all(center.field(), 2) {
        if quadrance(center, &p)? == k {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

/// f(i, j, k) = i j - (k - i - j)^2 / 4.
pub fn intersection_discriminant(i: FieldElement, j: FieldElement, k: FieldElement) -> FieldElement {
    let four_inv = i.field().elem(4).inv().expect("q is odd");
    let t = k - i - j;
    i * j - t * t * four_inv
}

/// |C_i(X) ∩ C_j(Y)| for Q(X, Y) = k != 0: 0, 1 or 2 as f(i, j, k) is a
/// non-square, zero or nonzero square.
pub fn predicted_intersections(i: FieldElement, j: FieldElement, k: FieldElement) -> Result<u32> {
    if i.is_zero() || j.is_zero() || k.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok((intersection_discriminant(i, j, k).quadratic_character() + 1) as u32)
}

/// Isotropic case Q(X, Y) = 0, X != Y: the circles meet in exactly one
/// point when i != j and not at all otherwise.
pub fn predicted_intersections_null(i: FieldElement, j: FieldElement) -> Result<u32> {
    if i.is_zero() || j.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(u32::from(i != j))
}

pub fn count_intersections_bruteforce(
    x: &Point,
    y: &Point,
    i: FieldElement,
    j: FieldElement,
) -> Result<usize> {
    if x.dim() != 2 || y.dim() != 2 {
        return Err(Error::DimensionMismatch(x.dim(), 2));
    }
    let mut count = 0;
    for p in Point::all(x.field(), 2) {
        if quadrance(x, &p)? == i && quadrance(y, &p)? == j {
            count += 1;
        }
    }
    Ok(count)
}

/// Intersection counts for every (i, j) at once: `table[i][j]` for a fixed
/// pair X, Y. Scans the plane once instead of q^2 times.
pub fn intersection_table(x: &Point, y: &Point) -> Result<Vec<Vec<usize>>> {
    let q = x.field().q() as usize;
    let mut table = vec![vec![0; q]; q];
    for p in Point::all(x.field(), 2) {
        let i = quadrance(x, &p)?.value() as usize;
        let j = quadrance(y, &p)?.value() as usize;
        table[i][j] += 1;
    }
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(q: u32, v: &[u64]) -> Point {
        Point::from_values(FieldSpec::new(q).unwrap(), v).unwrap()
    }

    fn e(q: u32, v: u64) -> FieldElement {
        FieldSpec::new(q).unwrap().elem(v)
    }

    #[test]
    fn quadrance_examples() {
        assert_eq!(quadrance(&pt(7, &[0, 0]), &pt(7, &[1, 2])).unwrap().value(), 5);
        assert_eq!(quadrance(&pt(5, &[0, 0]), &pt(5, &[1, 2])).unwrap().value(), 0);
        assert_eq!(quadrance(&pt(3, &[0, 0, 0]), &pt(3, &[1, 0, 0])).unwrap().value(), 1);
        assert!(matches!(
            quadrance(&pt(3, &[0, 0, 0]), &pt(3, &[1, 0])),
            Err(Error::DimensionMismatch(3, 2))
        ));
    }

    #[test]
    fn quadrance_symmetric_and_translation_invariant() {
        for q in [3, 5, 7] {
            let f = FieldSpec::new(q).unwrap();
            let pts: Vec<_> = Point::all(f, 2).collect();
            for x in &pts {
                for y in &pts {
                    let d = quadrance(x, y).unwrap();
                    assert_eq!(d, quadrance(y, x).unwrap());
                    for t in &pts {
                        assert_eq!(d, quadrance(&(x + t), &(y + t)).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn circle_examples() {
        let c = circle_points(&pt(3, &[0, 0]), e(3, 1)).unwrap();
        let want: Vec<_> = [[0, 1], [0, 2], [1, 0], [2, 0]].iter().map(|v| pt(3, v)).collect();
        assert_eq!(c, want);
        assert_eq!(circle_points(&pt(7, &[0, 0]), e(7, 1)).unwrap().len(), 8);
        assert_eq!(circle_points(&pt(5, &[0, 0]), e(5, 1)).unwrap().len(), 4);
    }

    #[test]
    fn circle_size_formula() {
        for q in [3u32, 5, 7, 11, 13] {
            let expect = if q % 4 == 1 { q - 1 } else { q + 1 } as usize;
            let f = FieldSpec::new(q).unwrap();
            for k in f.elements().skip(1) {
                assert_eq!(circle_points(&pt(q, &[1, 2]), k).unwrap().len(), expect);
            }
        }
    }

    #[test]
    fn predicted_examples() {
        assert_eq!(predicted_intersections(e(7, 1), e(7, 1), e(7, 1)).unwrap(), 0);
        assert_eq!(intersection_discriminant(e(7, 1), e(7, 1), e(7, 1)).value(), 6);
        for q in [5, 7, 11, 13] {
            assert_eq!(predicted_intersections(e(q, 1), e(q, 1), e(q, 4)).unwrap(), 1);
        }
        assert_eq!(predicted_intersections(e(13, 1), e(13, 1), e(13, 1)).unwrap(), 2);
        assert!(predicted_intersections(e(7, 0), e(7, 1), e(7, 1)).is_err());
        assert_eq!(predicted_intersections_null(e(5, 1), e(5, 2)).unwrap(), 1);
        assert_eq!(predicted_intersections_null(e(5, 1), e(5, 1)).unwrap(), 0);
        assert_eq!(predicted_intersections_null(e(5, 3), e(5, 3)).unwrap(), 0);
        assert!(predicted_intersections_null(e(5, 0), e(5, 3)).is_err());
    }

    #[test]
    fn bruteforce_examples() {
        let (o7, x7) = (pt(7, &[0, 0]), pt(7, &[1, 0]));
        assert_eq!(count_intersections_bruteforce(&o7, &x7, e(7, 1), e(7, 1)).unwrap(), 0);
        let (o5, y5) = (pt(5, &[0, 0]), pt(5, &[1, 2]));
        assert_eq!(count_intersections_bruteforce(&o5, &y5, e(5, 1), e(5, 2)).unwrap(), 1);
        assert_eq!(count_intersections_bruteforce(&o5, &y5, e(5, 1), e(5, 1)).unwrap(), 0);
    }

    #[test]
    fn table_matches_single_counts() {
        let (x, y) = (pt(7, &[2, 3]), pt(7, &[5, 1]));
        let table = intersection_table(&x, &y).unwrap();
        for i in 1..7 {
            for j in 1..7 {
                assert_eq!(
                    table[i as usize][j as usize],
                    count_intersections_bruteforce(&x, &y, e(7, i), e(7, j)).unwrap()
                );
            }
        }
    }
}
