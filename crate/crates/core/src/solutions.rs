//! Solvability certificates and parameterized Hermitian solutions of
//! `AX = B` and `AXA* = B`, plus least-squares and least-rank solutions.

use serde::{Deserialize, Serialize};

use crate::error::{dim, Error, Result};
use crate::linalg::{frobenius_norm_sq, inertia_unchecked, pinv, pinv_matrix, rank, same_range};
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// `AX = B` with `A`, `B` both `m x n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearEqSpec {
    a: Matrix,
    b: Matrix,
}

impl LinearEqSpec {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if a.shape() != b.shape() {
            return Err(dim(format!(
                "AX = B needs A and B of equal size, got {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    /// Order of the unknown `X`.
    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }

    /// The stacked equation `[A; C] X = [B; D]`, whose Hermitian solutions are the
    /// common Hermitian solutions of both equations.
    pub fn stack(&self, other: &LinearEqSpec) -> Result<LinearEqSpec> {
        LinearEqSpec::new(
            Matrix::vstack(&[&self.a, &other.a])?,
            Matrix::vstack(&[&self.b, &other.b])?,
        )
    }
}

/// `AXA* = B` with `A` `m x n` and `B` Hermitian `m x m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CongruenceEqSpec {
    a: Matrix,
    b: Matrix,
}

impl CongruenceEqSpec {
    pub fn new(a: Matrix, b: Matrix) -> Result<Self> {
        if b.shape() != (a.rows(), a.rows()) {
            return Err(dim(format!(
                "AXA* = B needs B of order {}, got {}x{}",
                a.rows(),
                b.rows(),
                b.cols()
            )));
        }
        if !b.is_hermitian() {
            return Err(Error::NotHermitian("B".into()));
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn n(&self) -> usize {
        self.a.cols()
    }

    pub fn m(&self) -> usize {
        self.a.rows()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Condition {
    pub label: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolvabilityCertificate {
    pub solvable: bool,
    pub conditions: Vec<Condition>,
}

impl SolvabilityCertificate {
    fn from_conditions(conds: Vec<(&str, bool)>) -> Self {
        let conditions: Vec<Condition> = conds
            .into_iter()
            .map(|(label, holds)| Condition {
                label: label.to_string(),
                holds,
            })
            .collect();
        Self {
            solvable: conditions.iter().all(|c| c.holds),
            conditions,
        }
    }

    /// Labels of the conditions that fail.
    pub fn failed(&self) -> Vec<&str> {
        self.conditions
            .iter()
            .filter(|c| !c.holds)
            .map(|c| c.label.as_str())
            .collect()
    }

    fn require(&self) -> Result<()> {
        if self.solvable {
            Ok(())
        } else {
            Err(Error::Unsolvable(format!(
                "failed: {}",
                self.failed().join(", ")
            )))
        }
    }
}

fn range_in(b: &Matrix, a: &Matrix) -> bool {
    rank(&Matrix::hstack(&[a, b]).expect("same rows")) == rank(a)
}

/// `AX = B` has a Hermitian solution iff `R(B) ⊆ R(A)` and `AB* = BA*`.
pub fn check_linear_hermitian(spec: &LinearEqSpec) -> SolvabilityCertificate {
    let ab = spec.a() * &spec.b().adjoint();
    SolvabilityCertificate::from_conditions(vec![
        ("R(B) ⊆ R(A)", range_in(spec.b(), spec.a())),
        ("AB* = BA*", ab.is_hermitian()),
    ])
}

/// `AX = B` has a solution `X ≽ 0` iff `R(B) ⊆ R(A)`, `AB* ≽ 0` and `R(AB*) = R(B)`.
pub fn check_linear_psd(spec: &LinearEqSpec) -> SolvabilityCertificate {
    let ab = spec.a() * &spec.b().adjoint();
    let herm = ab.is_hermitian();
    let psd = herm && inertia_unchecked(&ab).minus == 0;
    let ranges = same_range(&ab, spec.b()).expect("same rows");
    SolvabilityCertificate::from_conditions(vec![
        ("R(B) ⊆ R(A)", range_in(spec.b(), spec.a())),
        ("AB* = BA*", herm),
        ("AB* ≽ 0", psd),
        ("R(AB*) = R(B)", ranges),
    ])
}

/// `AXA* = B` is solvable iff `AA†B = B`.
pub fn check_congruence(spec: &CongruenceEqSpec) -> SolvabilityCertificate {
    let a = spec.a();
    let aab = &(a * &pinv_matrix(a)) * spec.b();
    SolvabilityCertificate::from_conditions(vec![("R(B) ⊆ R(A)", aab == *spec.b())])
}

fn require_shape(x: &Matrix, shape: (usize, usize), name: &str) -> Result<()> {
    if x.shape() != shape {
        return Err(dim(format!(
            "{name} is {}x{}, expected {}x{}",
            x.rows(),
            x.cols(),
            shape.0,
            shape.1
        )));
    }
    Ok(())
}

/// `X = X0 + F_A U F_A` over Hermitian `U`: all Hermitian solutions of `AX = B`.
#[derive(Debug, Clone)]
pub struct HermitianFamily {
    pub x0: Matrix,
    pub f: Matrix,
}

impl HermitianFamily {
    pub fn new(spec: &LinearEqSpec) -> Result<Self> {
        check_linear_hermitian(spec).require()?;
        let p = pinv(spec.a());
        let g = &p.pinv * spec.b();
        let x0 = &(&g + &g.adjoint()) - &(&(&g * &p.pinv) * spec.a());
        Ok(Self { x0, f: p.f_proj })
    }

    pub fn member(&self, u: &Matrix) -> Result<Matrix> {
        require_shape(u, self.f.shape(), "U")?;
        if !u.is_hermitian() {
            return Err(Error::NotHermitian("U".into()));
        }
        Ok(&self.x0 + &(&(&self.f * u) * &self.f))
    }
}

/// `X = X0 + F_A VV* F_A`: all PSD solutions of `AX = B`.
#[derive(Debug, Clone)]
pub struct PsdFamily {
    pub x0: Matrix,
    pub f: Matrix,
}

impl PsdFamily {
    pub fn new(spec: &LinearEqSpec) -> Result<Self> {
        check_linear_psd(spec).require()?;
        let b = spec.b();
        let bs = b.adjoint();
        let abs_pinv = pinv_matrix(&(spec.a() * &bs));
        let x0 = &(&bs * &abs_pinv) * b;
        Ok(Self {
            x0,
            f: pinv(spec.a()).f_proj,
        })
    }

    pub fn member(&self, v: &Matrix) -> Result<Matrix> {
        if v.rows() != self.f.rows() {
            return Err(dim(format!("V must have {} rows", self.f.rows())));
        }
        let fv = &self.f * v;
        Ok(&self.x0 + &(&fv * &fv.adjoint()))
    }
}

/// `X = X0 + F_A U + U* F_A` over arbitrary `U`.
#[derive(Debug, Clone)]
pub struct CongruenceFamily {
    pub x0: Matrix,
    pub f: Matrix,
}

impl CongruenceFamily {
    fn build(spec: &CongruenceEqSpec) -> Self {
        let p = pinv(spec.a());
        let x0 = &(&p.pinv * spec.b()) * &p.pinv.adjoint();
        Self { x0, f: p.f_proj }
    }

    pub fn new(spec: &CongruenceEqSpec) -> Result<Self> {
        check_congruence(spec).require()?;
        Ok(Self::build(spec))
    }

    /// The least-squares family, defined for every spec.
    pub fn least_squares(spec: &CongruenceEqSpec) -> Self {
        Self::build(spec)
    }

    pub fn member(&self, u: &Matrix) -> Result<Matrix> {
        require_shape(u, self.f.shape(), "U")?;
        let fu = &self.f * u;
        Ok(&(&self.x0 + &fu) + &fu.adjoint())
    }
}

/// `Y = -TM†T* + T1 V + V* T1*`: minimizers of `r(B - AYA*)`.
#[derive(Debug, Clone)]
pub struct LeastRankFamily {
    pub y0: Matrix,
    pub t1: Matrix,
    pub min_rank: usize,
    /// `-E_{T1} T M† T* E_{T1}`, the right side of the rank normal equation.
    normal_rhs: Matrix,
    e_t1: Matrix,
}

impl LeastRankFamily {
    pub fn new(spec: &CongruenceEqSpec) -> Self {
        let (a, b) = (spec.a(), spec.b());
        let (m, n) = a.shape();
        let mm = crate::blocks::m_ls_lr(a, b).expect("conforming");
        let p = pinv(&mm);
        let t = Matrix::hstack(&[&Matrix::zeros(n, m), &Matrix::identity(n)]).expect("rows");
        let y0 = -&(&(&t * &p.pinv) * &t.adjoint());
        assert!(y0.is_hermitian(), "-TM†T* must be Hermitian");
        let t1 = &t * &p.f_proj;
        let e_t1 = crate::blocks::e_proj(&t1);
        let normal_rhs = &(&e_t1 * &y0) * &e_t1;
        let rab = rank(&Matrix::hstack(&[a, b]).expect("rows"));
        let min_rank = 2 * rab - p.rank;
        Self {
            y0,
            t1,
            min_rank,
            normal_rhs,
            e_t1,
        }
    }

    pub fn member(&self, v: &Matrix) -> Result<Matrix> {
        require_shape(v, (self.t1.cols(), self.t1.rows()), "V")?;
        let tv = &self.t1 * v;
        Ok(&(&self.y0 + &tv) + &tv.adjoint())
    }

    /// `E_{T1} Y E_{T1} = -E_{T1} T M† T* E_{T1}`.
    pub fn satisfies_normal_equation(&self, y: &Matrix) -> bool {
        &(&self.e_t1 * y) * &self.e_t1 == self.normal_rhs
    }
}

/// General Hermitian solution `A†B + (A†B)* - A†BA†A + F_A U F_A`.
pub fn hermitian_solution(spec: &LinearEqSpec, u: &Matrix) -> Result<Matrix> {
    HermitianFamily::new(spec)?.member(u)
}

/// General PSD solution `B*(AB*)†B + F_A VV* F_A`.
pub fn psd_solution(spec: &LinearEqSpec, v: &Matrix) -> Result<Matrix> {
    PsdFamily::new(spec)?.member(v)
}

/// General Hermitian solution `A†B(A†)* + F_A U + U* F_A` of `AXA* = B`.
pub fn congruence_solution(spec: &CongruenceEqSpec, u: &Matrix) -> Result<Matrix> {
    CongruenceFamily::new(spec)?.member(u)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeastSquaresSolution {
    pub residual_norm_sq: Rational,
    pub x: Matrix,
}

/// Minimizer of `‖B - AXA*‖_F` over Hermitian `X`, with the minimal squared residual
/// `‖B - AA†BAA†‖_F²`.
pub fn least_squares_solution(spec: &CongruenceEqSpec, u: &Matrix) -> Result<LeastSquaresSolution> {
    let a = spec.a();
    let aa = a * &pinv_matrix(a);
    let resid = spec.b() - &(&(&aa * spec.b()) * &aa);
    let x = CongruenceFamily::least_squares(spec).member(u)?;
    Ok(LeastSquaresSolution {
        residual_norm_sq: frobenius_norm_sq(&resid),
        x,
    })
}

/// `A*AXA*A = A*BA`.
pub fn satisfies_normal_equation(spec: &CongruenceEqSpec, x: &Matrix) -> bool {
    let a = spec.a();
    let ata = &a.adjoint() * a;
    &(&ata * x) * &ata == &(&a.adjoint() * spec.b()) * a
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeastRankSolution {
    pub min_rank: usize,
    pub y: Matrix,
}

/// Minimizer of `r(B - AYA*)` over Hermitian `Y`; `min_rank = 2r[A, B] - r[B A; A* 0]`.
pub fn least_rank_solution(spec: &CongruenceEqSpec, v: &Matrix) -> Result<LeastRankSolution> {
    let fam = LeastRankFamily::new(spec);
    Ok(LeastRankSolution {
        min_rank: fam.min_rank,
        y: fam.member(v)?,
    })
}
