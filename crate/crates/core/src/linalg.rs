//! Rank, inertia, Moore-Penrose inverse and related exact kernels.

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intmat::{echelon_of, inertia_of, integerize_all, integerize_rows, ScaledMatrix};
use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Rational};

/// Inertia (i+, i-, i0) of a Hermitian matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Inertia {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

impl Inertia {
    pub fn rank(&self) -> usize {
        self.plus + self.minus
    }

    pub fn order(&self) -> usize {
        self.plus + self.minus + self.zero
    }

    /// Inertia of `-A` given the inertia of `A`.
    pub fn negated(&self) -> Inertia {
        Inertia {
            plus: self.minus,
            minus: self.plus,
            zero: self.zero,
        }
    }
}

impl std::fmt::Display for Inertia {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.plus, self.minus, self.zero)
    }
}

// ---------------------------------------------------------------------------
// rank: fraction-free (Bareiss) elimination over the Gaussian integers

/// Exact rank. Rows are integerized and reduced by Bareiss elimination; the pivot
/// in each column is the nonzero entry of smallest norm.
pub fn rank(a: &Matrix) -> usize {
    if a.rows() == 0 || a.cols() == 0 {
        return 0;
    }
    echelon_of(integerize_rows(a), a.cols()).rank
}

// ---------------------------------------------------------------------------
// inertia: congruence reduction

/// Exact inertia of a Hermitian matrix by congruence reduction.
///
/// Pivot order: the first nonzero diagonal entry of the active block, otherwise
/// the first nonzero off-diagonal entry in row-major order, which splits off a
/// hyperbolic 2x2 block with inertia (1, 1).
///
/// The matrix is first scaled to Gaussian integers and every Schur complement is
/// kept multiplied by its pivot (by `|a|²` for hyperbolic pivots). Scaling by a
/// negative pivot swaps the roles of `i+` and `i-`, which is tracked with a flag.
pub fn inertia(a: &Matrix) -> Result<Inertia> {
    if !a.is_hermitian() {
        return Err(Error::NotHermitian(format!("{}x{}", a.rows(), a.cols())));
    }
    Ok(inertia_unchecked(a))
}

pub(crate) fn inertia_unchecked(a: &Matrix) -> Inertia {
    let n = a.rows();
    let (plus, minus) = inertia_of(integerize_all(a));
    Inertia {
        plus,
        minus,
        zero: n - plus - minus,
    }
}

/// Inertia by congruence reduction carried out directly in rational arithmetic.
///
/// Slower than [`inertia`]; kept as an independent reference implementation.
pub fn inertia_rational(a: &Matrix) -> Result<Inertia> {
    if !a.is_hermitian() {
        return Err(Error::NotHermitian(format!("{}x{}", a.rows(), a.cols())));
    }
    let n = a.rows();
    let mut w: Vec<Vec<GaussianRational>> = (0..n).map(|i| a.row(i).to_vec()).collect();
    let (mut plus, mut minus) = (0usize, 0usize);
    loop {
        let k = w.len();
        if k == 0 {
            break;
        }
        if let Some(p) = (0..k).find(|&i| !w[i][i].is_zero()) {
            let d = w[p][p].re().clone();
            if d.is_positive() {
                plus += 1;
            } else {
                minus += 1;
            }
            let dinv = d.recip();
            let col: Vec<GaussianRational> = (0..k).map(|i| w[i][p].clone()).collect();
            let rowp = w[p].clone();
            let mut next = Vec::with_capacity(k - 1);
            for i in (0..k).filter(|&i| i != p) {
                let f = col[i].scale(&dinv);
                let mut row = Vec::with_capacity(k - 1);
                for j in (0..k).filter(|&j| j != p) {
                    let mut v = w[i][j].clone();
                    if !f.is_zero() && !rowp[j].is_zero() {
                        v -= &(&f * &rowp[j]);
                    }
                    row.push(v);
                }
                next.push(row);
            }
            w = next;
            continue;
        }
        let mut found = None;
        'scan: for (i, row) in w.iter().enumerate() {
            for (j, z) in row.iter().enumerate() {
                if !z.is_zero() {
                    found = Some((i, j));
                    break 'scan;
                }
            }
        }
        let Some((i, j)) = found else { break };
        plus += 1;
        minus += 1;
        let aij_inv = w[i][j].inv().expect("nonzero");
        let aji_inv = w[j][i].inv().expect("nonzero");
        let mut next = Vec::with_capacity(k - 2);
        for r in (0..k).filter(|&r| r != i && r != j) {
            let left_i = &w[r][i] * &aji_inv;
            let left_j = &w[r][j] * &aij_inv;
            let mut row = Vec::with_capacity(k - 2);
            for s in (0..k).filter(|&s| s != i && s != j) {
                let mut v = w[r][s].clone();
                if !left_i.is_zero() && !w[j][s].is_zero() {
                    v -= &(&left_i * &w[j][s]);
                }
                if !left_j.is_zero() && !w[i][s].is_zero() {
                    v -= &(&left_j * &w[i][s]);
                }
                row.push(v);
            }
            next.push(row);
        }
        w = next;
    }
    Ok(Inertia {
        plus,
        minus,
        zero: n - plus - minus,
    })
}

/// `A ≽ 0`, decided as `i-(A) = 0`.
pub fn is_psd(a: &Matrix) -> Result<bool> {
    Ok(inertia(a)?.minus == 0)
}

// ---------------------------------------------------------------------------
// reduced echelon form, inverse, pseudoinverse

/// Reduced row echelon form and pivot columns.
pub fn rref(a: &Matrix) -> (Matrix, Vec<usize>) {
    let (rows, cols) = a.shape();
    let mut w: Vec<Vec<GaussianRational>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !w[i][c].is_zero()) else {
            continue;
        };
        w.swap(r, p);
        let inv = w[r][c].inv().expect("nonzero pivot");
        for j in c..cols {
            w[r][j] = &w[r][j] * &inv;
        }
        let pivot_row = w[r].clone();
        for (i, row) in w.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for j in c..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &(&f * &pivot_row[j]);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let data = w.into_iter().flatten().collect();
    (Matrix::new(rows, cols, data).expect("shape"), pivots)
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(a: &Matrix) -> Option<Matrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let aug = Matrix::hstack(&[a, &Matrix::identity(n)]).expect("same rows");
    let (r, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(r.slice(0, n, n, n))
}

/// `A†` together with the projectors `E_A = I - AA†` and `F_A = I - A†A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PinvBundle {
    pub pinv: Matrix,
    pub e_proj: Matrix,
    pub f_proj: Matrix,
    pub rank: usize,
}

/// Moore-Penrose inverse with both projectors.
pub fn pinv(a: &Matrix) -> PinvBundle {
    let (m, n) = a.shape();
    let (p, rank) = pinv_with_rank(a);
    let ap = a * &p;
    let pa = &p * a;
    PinvBundle {
        e_proj: &Matrix::identity(m) - &ap,
        f_proj: &Matrix::identity(n) - &pa,
        pinv: p,
        rank,
    }
}

/// `A†` alone.
pub fn pinv_matrix(a: &Matrix) -> Matrix {
    pinv_with_rank(a).0
}

/// Full-rank factorization through integer bases.
///
/// With `A = L⁻¹A'` for a positive integer `L`, let `F'` be the pivot columns and
/// `G'` a set of independent rows of the integer matrix `A'`. Then `F'` and `G'` span
/// the column and row spaces of `A`, and `A† = L G'*(F'* A' G'*)⁻¹ F'*`, which equals
/// `G*(GG*)⁻¹(F*F)⁻¹F*` for the reduced-echelon factorization (see [`pinv_reference`]).
fn pinv_with_rank(a: &Matrix) -> (Matrix, usize) {
    let (m, n) = a.shape();
    if m == 0 || n == 0 || a.is_zero() {
        return (Matrix::zeros(n, m), 0);
    }
    let scaled = ScaledMatrix::from_matrix(a);
    let ai = ScaledMatrix::from_matrix(&scaled.numerators());
    let ech = echelon_of(ai.rows_vec(), n);
    let fs = ai.select_columns(&ech.pivot_cols).adjoint();
    let gs = ai.select_rows(&ech.pivot_rows).adjoint();
    let k = fs.mul(&ai).mul(&gs);
    let x = k.solve(&fs).expect("F'* A' G'* is nonsingular");
    let p = gs.mul(&x).scale_int(scaled.denominator());
    (p.to_matrix(), ech.rank)
}

/// `A† = G*(GG*)⁻¹(F*F)⁻¹F*` with `F` the pivot columns of `A` and `G` the nonzero
/// rows of its reduced echelon form, computed in plain rational arithmetic.
pub fn pinv_reference(a: &Matrix) -> Matrix {
    let (m, n) = a.shape();
    if m == 0 || n == 0 || a.is_zero() {
        return Matrix::zeros(n, m);
    }
    let (r, pivots) = rref(a);
    let k = pivots.len();
    let f = a.select_columns(&pivots);
    let g = r.slice(0, 0, k, n);
    let fs = f.adjoint();
    let gs = g.adjoint();
    let ftf_inv = inverse(&(&fs * &f)).expect("F has full column rank");
    let ggt_inv = inverse(&(&g * &gs)).expect("G has full row rank");
    &(&(&gs * &ggt_inv) * &ftf_inv) * &fs
}

/// `‖A‖_F²` as an exact rational.
pub fn frobenius_norm_sq(a: &Matrix) -> Rational {
    a.entries().iter().map(GaussianRational::norm_sqr).sum()
}

/// `R(B) ⊆ R(A)`, decided as `r[A, B] = r(A)`.
pub fn range_included(b: &Matrix, a: &Matrix) -> Result<bool> {
    let ab = Matrix::hstack(&[a, b])?;
    Ok(rank(&ab) == rank(a))
}

/// `R(U) = R(V)`, decided as `r[U, V] = r(U) = r(V)`.
pub fn same_range(u: &Matrix, v: &Matrix) -> Result<bool> {
    let uv = Matrix::hstack(&[u, v])?;
    let r = rank(&uv);
    Ok(r == rank(u) && r == rank(v))
}

pub(crate) fn require_hermitian(a: &Matrix, name: &str) -> Result<()> {
    if a.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian(name.to_string()))
    }
}
