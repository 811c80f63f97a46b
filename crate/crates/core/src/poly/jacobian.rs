use crate::arith::Field;

use super::{Poly, PolyError, RingExt};

/// Matrix of partial derivatives: row `i` is the gradient of `fs[i]`.
pub fn jacobian<F: Field>(fs: &[Poly<F>]) -> Result<Vec<Vec<Poly<F>>>, PolyError> {
    let Some(first) = fs.first() else {
        return Ok(Vec::new());
    };
    let ring = first.ring();
    if fs.iter().any(|f| !f.ring().same_ring(ring)) {
        return Err(PolyError::RingMismatch);
    }
    Ok(fs
        .iter()
        .map(|f| (0..ring.nvars()).map(|i| f.derivative(i)).collect())
        .collect())
}

/// All `k`-element subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Determinant by cofactor expansion along the first row.
pub fn determinant<F: Field>(m: &[Vec<Poly<F>>]) -> Poly<F> {
    match m.len() {
        0 => panic!("determinant of an empty matrix"),
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        n => {
            let mut acc = m[0][0].ring().zero();
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let sub: Vec<Vec<Poly<F>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|&(c, _)| c != j)
                            .map(|(_, p)| p.clone())
                            .collect()
                    })
                    .collect();
                let term = m[0][j].mul(&determinant(&sub));
                acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
            }
            acc
        }
    }
}

/// The `k × k` minors, rows subsets outer, column subsets inner, both in
/// lexicographic order.
pub fn minors<F: Field>(m: &[Vec<Poly<F>>], k: usize) -> Result<Vec<Poly<F>>, PolyError> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    if k == 0 || k > rows || k > cols {
        return Err(PolyError::MinorSize { k, rows, cols });
    }
    let mut out = Vec::new();
    for rs in subsets(rows, k) {
        for cs in subsets(cols, k) {
            let sub: Vec<Vec<Poly<F>>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c].clone()).collect())
                .collect();
            out.push(determinant(&sub));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;
    use crate::poly::{parse_poly, MonomialOrder, PolyRing};

    #[test]
    fn jacobian_of_square() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x"], MonomialOrder::DegRevLex)
            .unwrap();
        let j = jacobian(&[parse_poly("x^2", &r).unwrap()]).unwrap();
        assert_eq!(j, vec![vec![parse_poly("2*x", &r).unwrap()]]);
    }

    #[test]
    fn subset_enumeration() {
        assert_eq!(subsets(5, 2).len(), 10);
        assert_eq!(subsets(7, 4).len(), 35);
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn minor_size_checked() {
        let r = PolyRing::new(PrimeField::new(7).unwrap(), &["x", "y"], MonomialOrder::DegRevLex)
            .unwrap();
        let j = jacobian(&[parse_poly("x*y", &r).unwrap()]).unwrap();
        assert!(matches!(minors(&j, 2), Err(PolyError::MinorSize { .. })));
        assert_eq!(minors(&j, 1).unwrap().len(), 2);
    }

    #[test]
    fn three_by_three_determinant() {
        let r = PolyRing::new(PrimeField::new(101).unwrap(), &["x"], MonomialOrder::DegRevLex)
            .unwrap();
        let c = |n: i64| r.from_i64(n);
        let m = vec![
            vec![c(2), c(0), c(1)],
            vec![c(1), c(3), c(2)],
            vec![c(1), c(1), c(1)],
        ];
        // 2*(3-2) - 0 + 1*(1-3) = 0
        assert!(determinant(&m).is_zero());
    }
}
