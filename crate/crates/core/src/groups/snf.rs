/// Smith normal form `U R V = D` of an integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Snf {
    /// Diagonal of `D`, nonnegative, each entry dividing the next nonzero one.
    pub diagonal: Vec<i128>,
    /// Unimodular row transform `U` (`r x r`).
    pub row_transform: Vec<Vec<i128>>,
    /// Unimodular column transform `V` (`c x c`).
    pub col_transform: Vec<Vec<i128>>,
}

fn identity(n: usize) -> Vec<Vec<i128>> {
    (0..n).map(|i| (0..n).map(|j| i128::from(i == j)).collect()).collect()
}

/// Computes the Smith normal form of an `r x c` integer matrix given by rows.
pub fn smith_normal_form(matrix: &[Vec<i128>], cols: usize) -> Snf {
    let r = matrix.len();
    let c = cols;
    let mut a: Vec<Vec<i128>> = matrix.to_vec();
    let mut u = identity(r);
    let mut v = identity(c);

    let row_axpy = |a: &mut Vec<Vec<i128>>, u: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        let s = a[src].clone();
        for (x, y) in a[dst].iter_mut().zip(&s) {
            *x -= q * y;
        }
        let s = u[src].clone();
        for (x, y) in u[dst].iter_mut().zip(&s) {
            *x -= q * y;
        }
    };
    let col_axpy = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, dst: usize, src: usize, q: i128| {
        for row in a.iter_mut() {
            row[dst] -= q * row[src];
        }
        for row in v.iter_mut() {
            row[dst] -= q * row[src];
        }
    };

    let mut diagonal = Vec::new();
    for t in 0..r.min(c) {
        loop {
            // smallest nonzero entry of the trailing block becomes the pivot
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(diagonal, u, v);
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..r {
                let q = a[i][t].div_euclid(p);
                if q != 0 {
                    row_axpy(&mut a, &mut u, i, t, q);
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..c {
                let q = a[t][j].div_euclid(p);
                if q != 0 {
                    col_axpy(&mut a, &mut v, j, t, q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r).find(|&i| (t + 1..c).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => row_axpy(&mut a, &mut u, t, i, -1),
                None => break,
            }
        }
        if a[t][t] < 0 {
            a[t].iter_mut().for_each(|x| *x = -*x);
            u[t].iter_mut().for_each(|x| *x = -*x);
        }
        diagonal.push(a[t][t]);
    }
    finish(diagonal, u, v)
}

/// Pads the diagonal with the zeros of a rank-deficient matrix.
fn finish(mut diagonal: Vec<i128>, u: Vec<Vec<i128>>, v: Vec<Vec<i128>>) -> Snf {
    diagonal.resize(u.len().min(v.len()), 0);
    Snf {
        diagonal,
        row_transform: u,
        col_transform: v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mul(a: &[Vec<i128>], b: &[Vec<i128>]) -> Vec<Vec<i128>> {
        let inner = b.len();
        let cols = b.first().map_or(0, Vec::len);
        a.iter()
            .map(|row| (0..cols).map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum()).collect())
            .collect()
    }

    fn check(m: &[Vec<i128>], cols: usize) -> Snf {
        let s = smith_normal_form(m, cols);
        let d = mul(&mul(&s.row_transform, m), &s.col_transform);
        for (i, row) in d.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let expect = if i == j { s.diagonal[i] } else { 0 };
                assert_eq!(x, expect, "U R V != D for {m:?}");
            }
        }
        for w in s.diagonal.windows(2) {
            if w[1] != 0 {
                assert_eq!(w[1] % w[0], 0, "divisibility in {:?}", s.diagonal);
            }
        }
        assert!(s.diagonal.iter().all(|&x| x >= 0));
        s
    }

    #[test]
    fn small_examples() {
        assert_eq!(check(&[vec![2, 0], vec![0, 3]], 2).diagonal, vec![1, 6]);
        assert_eq!(check(&[vec![4, 0], vec![0, 2], vec![0, 0]], 2).diagonal, vec![2, 4]);
        assert_eq!(check(&[vec![4], vec![2]], 1).diagonal, vec![2]);
        assert_eq!(check(&[vec![0, 0]], 2).diagonal, vec![0]);
    }

    proptest! {
        #[test]
        fn decomposition_holds(rows in 1usize..5, cols in 1usize..5, seed in prop::collection::vec(-9i128..=9, 16)) {
            let m: Vec<Vec<i128>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
            check(&m, cols);
        }
    }
}
