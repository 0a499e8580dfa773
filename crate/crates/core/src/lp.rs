//! Dense simplex solvers sized for desk-scale instances.
//!
//! Two entry points:
//!
//! * [`solve_packing`] — `max c·y  s.t.  M y <= b, y >= 0` with `b >= 0`,
//!   generic over the scalar so the same pivoting runs in `f64` or in exact
//!   rationals. The slack basis is feasible, so no phase 1 is needed. The
//!   covering LP is solved through its packing dual; the optimal covering
//!   weights are the row multipliers of the final tableau.
//! * [`solve_general`] — two-phase `f64` simplex for `max c·x  s.t.  A x <= b`
//!   with free variables. Used for support functions, boundedness checks and
//!   Chebyshev centers of H-polytopes.
//!
//! Both use Bland's rule, which guarantees termination and makes every solve
//! deterministic.

use crate::error::{CoverError, Result};

/// Scalar the pivoting runs over. `f64` compares with a small tolerance,
/// exact rationals compare exactly.
pub trait LpScalar: Clone + PartialOrd + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div(&self, o: &Self) -> Self;
    fn to_f64(&self) -> f64;
    /// Usable as a pivot element (clearly positive).
    fn is_pos_pivot(&self) -> bool;
    /// Strictly negative beyond tolerance (candidate entering column).
    fn is_neg(&self) -> bool;
}

impl LpScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_pos_pivot(&self) -> bool {
        *self > 1e-11
    }
    fn is_neg(&self) -> bool {
        *self < -1e-9
    }
}

pub type Rational = num::BigRational;

impl LpScalar for Rational {
    fn zero() -> Self {
        num::Zero::zero()
    }
    fn one() -> Self {
        num::One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div(&self, o: &Self) -> Self {
        self / o
    }
    fn to_f64(&self) -> f64 {
        num::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn is_pos_pivot(&self) -> bool {
        num::Signed::is_positive(self)
    }
    fn is_neg(&self) -> bool {
        num::Signed::is_negative(self)
    }
}

const MAX_PIVOTS: usize = 200_000;

/// Optimal packing solution together with the tableau multipliers.
#[derive(Debug, Clone)]
pub struct PackingSolution<S> {
    pub objective: S,
    /// Values of the packing variables `y`.
    pub y: Vec<S>,
    /// Row multipliers (shadow prices), one per `<=` constraint. For a
    /// covering LP posed as the dual packing problem these are the optimal
    /// covering weights.
    pub multipliers: Vec<S>,
}

/// Sparse constraint matrix: `rows[i]` lists `(column, coefficient)`.
pub struct PackingProblem<'a, S> {
    pub num_vars: usize,
    pub rows: &'a [Vec<(usize, S)>],
    pub rhs: &'a [S],
    pub objective: &'a [S],
}

/// Solves `max c·y  s.t.  M y <= b, y >= 0` with `b >= 0` by the primal
/// simplex from the slack basis. Errors with `InfeasibleInstance` if the LP
/// is unbounded (for a covering dual this means an uncoverable element).
pub fn solve_packing<S: LpScalar>(p: &PackingProblem<'_, S>) -> Result<PackingSolution<S>> {
    let m = p.rows.len();
    let n = p.num_vars;
    assert_eq!(p.rhs.len(), m);
    assert_eq!(p.objective.len(), n);
    debug_assert!(p.rhs.iter().all(|b| !b.is_neg()));

    let width = n + m + 1;
    let rhs_col = n + m;
    let mut t: Vec<Vec<S>> = Vec::with_capacity(m + 1);
    for (i, row) in p.rows.iter().enumerate() {
        let mut r = vec![S::zero(); width];
        for (j, v) in row {
            r[*j] = v.clone();
        }
        r[n + i] = S::one();
        r[rhs_col] = p.rhs[i].clone();
        t.push(r);
    }
    // Objective row stores z_j - c_j; optimal when all nonnegative.
    let mut z = vec![S::zero(); width];
    for j in 0..n {
        z[j] = S::zero().sub(&p.objective[j]);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    for _ in 0..MAX_PIVOTS {
        // Bland: entering column = lowest index with negative reduced cost.
        let Some(enter) = (0..n + m).find(|j| z[*j].is_neg()) else {
            let mut y = vec![S::zero(); n];
            for (i, b) in basis.iter().enumerate() {
                if *b < n {
                    y[*b] = t[i][rhs_col].clone();
                }
            }
            let multipliers: Vec<S> = (0..m).map(|i| z[n + i].clone()).collect();
            let objective = (0..n).fold(S::zero(), |acc, j| acc.add(&y[j].mul(&p.objective[j])));
            return Ok(PackingSolution { objective, y, multipliers });
        };
        // Ratio test; ties broken by lowest basic variable index (Bland).
        let mut leave: Option<(usize, S)> = None;
        for i in 0..m {
            if !t[i][enter].is_pos_pivot() {
                continue;
            }
            let ratio = t[i][rhs_col].div(&t[i][enter]);
            let better = match &leave {
                None => true,
                Some((li, lr)) => {
                    ratio < *lr || (!(ratio > *lr) && basis[i] < basis[*li])
                }
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((pivot_row, _)) = leave else {
            return Err(CoverError::InfeasibleInstance(
                "packing LP unbounded (covering dual infeasible)".into(),
            ));
        };
        pivot(&mut t, &mut z, &mut basis, pivot_row, enter, rhs_col);
    }
    Err(CoverError::SizeLimitExceeded("simplex pivot limit reached".into()))
}

fn pivot<S: LpScalar>(
    t: &mut [Vec<S>],
    z: &mut [S],
    basis: &mut [usize],
    row: usize,
    col: usize,
    rhs_col: usize,
) {
    let piv = t[row][col].clone();
    for v in t[row].iter_mut() {
        *v = v.div(&piv);
    }
    for i in 0..t.len() {
        if i == row {
            continue;
        }
        let f = t[i][col].clone();
        if f == S::zero() {
            continue;
        }
        for j in 0..=rhs_col {
            let d = f.mul(&t[row][j]);
            t[i][j] = t[i][j].sub(&d);
        }
    }
    let f = z[col].clone();
    if f != S::zero() {
        for j in 0..=rhs_col {
            let d = f.mul(&t[row][j]);
            z[j] = z[j].sub(&d);
        }
    }
    basis[row] = col;
}

/// Outcome of the general solver.
#[derive(Debug, Clone)]
pub enum LpOutcome {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

/// Solves `max c·x  s.t.  A x <= b` with unrestricted `x` (two-phase,
/// variables split into positive and negative parts).
pub fn solve_general(a: &[Vec<f64>], b: &[f64], c: &[f64]) -> Result<LpOutcome> {
    let m = a.len();
    let n = c.len();
    // Columns: u (n), v (n), slacks (m), artificials (k), rhs.
    let mut neg_rows: Vec<usize> = Vec::new();
    for (i, bi) in b.iter().enumerate() {
        if *bi < 0.0 {
            neg_rows.push(i);
        }
    }
    let k = neg_rows.len();
    let cols = 2 * n + m + k;
    let rhs_col = cols;
    let mut t = vec![vec![0.0f64; cols + 1]; m];
    let mut basis = vec![0usize; m];
    let mut art_of_row = vec![usize::MAX; m];
    for (ai, r) in neg_rows.iter().enumerate() {
        art_of_row[*r] = 2 * n + m + ai;
    }
    for i in 0..m {
        let flip = if b[i] < 0.0 { -1.0 } else { 1.0 };
        for j in 0..n {
            t[i][j] = flip * a[i][j];
            t[i][n + j] = -flip * a[i][j];
        }
        t[i][2 * n + i] = flip;
        t[i][rhs_col] = flip * b[i];
        if art_of_row[i] != usize::MAX {
            t[i][art_of_row[i]] = 1.0;
            basis[i] = art_of_row[i];
        } else {
            basis[i] = 2 * n + i;
        }
    }

    if k > 0 {
        // Phase 1: minimize the sum of artificials == max(-sum).
        let mut z = vec![0.0f64; cols + 1];
        for i in 0..m {
            if art_of_row[i] != usize::MAX {
                for j in 0..=cols {
                    z[j] -= t[i][j];
                }
            }
        }
        for j in 2 * n + m..cols {
            z[j] = 0.0; // basic artificial columns have zero reduced cost
        }
        run_phase(&mut t, &mut z, &mut basis, cols, rhs_col, None)?;
        let infeas = -z[rhs_col];
        if infeas > 1e-8 {
            return Ok(LpOutcome::Infeasible);
        }
    }

    // Phase 2: real objective over (u, v); artificials barred from entering.
    let mut z = vec![0.0f64; cols + 1];
    for j in 0..n {
        z[j] = -c[j];
        z[n + j] = c[j];
    }
    // Make reduced costs of basic columns zero.
    for i in 0..m {
        let f = z[basis[i]];
        if f != 0.0 {
            for j in 0..=cols {
                z[j] -= f * t[i][j];
            }
        }
    }
    let barrier = 2 * n + m;
    match run_phase(&mut t, &mut z, &mut basis, cols, rhs_col, Some(barrier))? {
        PhaseEnd::Optimal => {}
        PhaseEnd::Unbounded => return Ok(LpOutcome::Unbounded),
    }
    let mut x = vec![0.0f64; n];
    for i in 0..m {
        if basis[i] < n {
            x[basis[i]] += t[i][rhs_col];
        } else if basis[i] < 2 * n {
            x[basis[i] - n] -= t[i][rhs_col];
        }
    }
    let value = c.iter().zip(&x).map(|(ci, xi)| ci * xi).sum();
    Ok(LpOutcome::Optimal { x, value })
}

enum PhaseEnd {
    Optimal,
    Unbounded,
}

fn run_phase(
    t: &mut [Vec<f64>],
    z: &mut Vec<f64>,
    basis: &mut [usize],
    cols: usize,
    rhs_col: usize,
    bar_from: Option<usize>,
) -> Result<PhaseEnd> {
    let m = t.len();
    for _ in 0..MAX_PIVOTS {
        let limit = bar_from.unwrap_or(cols);
        let Some(enter) = (0..limit).find(|j| z[*j] < -1e-9) else {
            return Ok(PhaseEnd::Optimal);
        };
        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            if t[i][enter] <= 1e-11 {
                continue;
            }
            let ratio = t[i][rhs_col] / t[i][enter];
            let better = match leave {
                None => true,
                Some((li, lr)) => ratio < lr - 1e-12 || (ratio < lr + 1e-12 && basis[i] < basis[li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            return Ok(PhaseEnd::Unbounded);
        };
        let piv = t[row][enter];
        for v in t[row].iter_mut() {
            *v /= piv;
        }
        for i in 0..m {
            if i != row && t[i][enter] != 0.0 {
                let f = t[i][enter];
                for j in 0..=rhs_col {
                    t[i][j] -= f * t[row][j];
                }
            }
        }
        let f = z[enter];
        if f != 0.0 {
            for j in 0..=rhs_col {
                z[j] -= f * t[row][j];
            }
        }
        basis[row] = enter;
    }
    Err(CoverError::SizeLimitExceeded("simplex pivot limit reached".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_rows(rows: &[Vec<f64>]) -> Vec<Vec<(usize, f64)>> {
        rows.iter()
            .map(|r| r.iter().enumerate().filter(|(_, v)| **v != 0.0).map(|(j, v)| (j, *v)).collect())
            .collect()
    }

    #[test]
    fn packing_box() {
        // max y1 + y2, y1 <= 1, y2 <= 2
        let rows = dense_rows(&[vec![1.0, 0.0], vec![0.0, 1.0]]);
        let p = PackingProblem { num_vars: 2, rows: &rows, rhs: &[1.0, 2.0], objective: &[1.0, 1.0] };
        let s = solve_packing(&p).unwrap();
        assert!((s.objective - 3.0).abs() < 1e-9);
        assert!((s.multipliers[0] - 1.0).abs() < 1e-9);
        assert!((s.multipliers[1] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn packing_shared_budget() {
        // max y1 + y2 s.t. y1 + y2 <= 1 twice over
        let rows = dense_rows(&[vec![1.0, 1.0], vec![1.0, 1.0]]);
        let p = PackingProblem { num_vars: 2, rows: &rows, rhs: &[1.0, 1.0], objective: &[1.0, 1.0] };
        let s = solve_packing(&p).unwrap();
        assert!((s.objective - 1.0).abs() < 1e-9);
        let mult_total: f64 = s.multipliers.iter().sum();
        assert!((mult_total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn packing_exact_rational() {
        use num::FromPrimitive;
        let one = || Rational::from_i64(1).unwrap();
        let rows: Vec<Vec<(usize, Rational)>> =
            vec![vec![(0, one()), (1, one())], vec![(1, one())]];
        let p = PackingProblem {
            num_vars: 2,
            rows: &rows,
            rhs: &[one(), one()],
            objective: &[one(), one()],
        };
        let s = solve_packing(&p).unwrap();
        assert_eq!(s.objective, one());
    }

    #[test]
    fn general_support_function() {
        // max x + y over the unit square [0,1]^2 written as Ax <= b
        let a = vec![
            vec![1.0, 0.0],
            vec![-1.0, 0.0],
            vec![0.0, 1.0],
            vec![0.0, -1.0],
        ];
        let b = vec![1.0, 0.0, 1.0, 0.0];
        match solve_general(&a, &b, &[1.0, 1.0]).unwrap() {
            LpOutcome::Optimal { value, .. } => assert!((value - 2.0).abs() < 1e-9),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn general_negative_rhs_needs_phase1() {
        // x >= 0.25 and x <= 1: max -x should give -0.25
        let a = vec![vec![-1.0], vec![1.0]];
        let b = vec![-0.25, 1.0];
        match solve_general(&a, &b, &[-1.0]).unwrap() {
            LpOutcome::Optimal { value, x } => {
                assert!((value + 0.25).abs() < 1e-9);
                assert!((x[0] - 0.25).abs() < 1e-9);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn general_detects_infeasible_and_unbounded() {
        // x <= -1 and x >= 0 is infeasible
        let a = vec![vec![1.0], vec![-1.0]];
        let b = vec![-1.0, 0.0];
        assert!(matches!(solve_general(&a, &b, &[1.0]).unwrap(), LpOutcome::Infeasible));
        // max x with x >= 0 only is unbounded
        let a = vec![vec![-1.0]];
        let b = vec![0.0];
        assert!(matches!(solve_general(&a, &b, &[1.0]).unwrap(), LpOutcome::Unbounded));
    }
}
