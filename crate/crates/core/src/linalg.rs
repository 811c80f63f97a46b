//! Dense Gauss-Jordan elimination over a [`Field`].

use crate::arith::Field;

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn rref<F: Field>(field: &F, rows: &mut Vec<Vec<F::Elem>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !field.is_zero(&rows[i][c])) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(&rows[r][c]).unwrap();
        for x in rows[r].iter_mut().skip(c) {
            *x = field.mul(x, &inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || field.is_zero(&row[c]) {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !field.is_zero(y) {
                    *x = field.sub(x, &field.mul(&f, y));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: Field>(field: &F, rows: &[Vec<F::Elem>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of `{ v : M v = 0 }` for the matrix with the given rows and
/// `ncols` columns.
pub fn kernel<F: Field>(field: &F, rows: &[Vec<F::Elem>], ncols: usize) -> Vec<Vec<F::Elem>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let mut is_pivot = vec![false; ncols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![field.zero(); ncols];
        v[free] = field.one();
        for (row, &p) in m.iter().zip(&pivots) {
            v[p] = field.neg(&row[free]);
        }
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::PrimeField;

    #[test]
    fn kernel_of_rank_one() {
        let f = PrimeField::new(7).unwrap();
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6]];
        assert_eq!(rank(&f, &rows), 1);
        let k = kernel(&f, &rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let dot = (0..3).fold(0, |acc, i| f.add(&acc, &f.mul(&rows[0][i], &v[i])));
            assert_eq!(dot, 0);
        }
    }

    #[test]
    fn empty_matrix_kernel_is_everything() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(kernel(&f, &[], 2).len(), 2);
    }
}
