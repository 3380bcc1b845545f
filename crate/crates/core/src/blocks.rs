//! Named block matrices and checkable rank/inertia expansion identities.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{dim, Error, Result};
use crate::linalg::{
    inertia, inertia_unchecked, is_psd, pinv, pinv_matrix, range_included, rank, Inertia,
};
use crate::matrix::Matrix;
use crate::scalar::Rational;

/// `E_A = I - AA†`.
pub fn e_proj(a: &Matrix) -> Matrix {
    &Matrix::identity(a.rows()) - &(a * &pinv_matrix(a))
}

/// `F_A = I - A†A`.
pub fn f_proj(a: &Matrix) -> Matrix {
    &Matrix::identity(a.cols()) - &(&pinv_matrix(a) * a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockName {
    #[serde(rename = "M1_bordered")]
    M1Bordered,
    #[serde(rename = "M2_bordered")]
    M2Bordered,
    #[serde(rename = "M_twoCongruence")]
    MTwoCongruence,
    #[serde(rename = "N_twoLinear")]
    NTwoLinear,
    #[serde(rename = "M_twoLinear")]
    MTwoLinear,
    #[serde(rename = "M_psdVsP")]
    MPsdVsP,
    #[serde(rename = "M_lsLr")]
    MLsLr,
    #[serde(rename = "N_lsLr")]
    NLsLr,
}

impl BlockName {
    pub const ALL: [BlockName; 8] = [
        BlockName::M1Bordered,
        BlockName::M2Bordered,
        BlockName::MTwoCongruence,
        BlockName::NTwoLinear,
        BlockName::MTwoLinear,
        BlockName::MPsdVsP,
        BlockName::MLsLr,
        BlockName::NLsLr,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BlockName::M1Bordered => "M1_bordered",
            BlockName::M2Bordered => "M2_bordered",
            BlockName::MTwoCongruence => "M_twoCongruence",
            BlockName::NTwoLinear => "N_twoLinear",
            BlockName::MTwoLinear => "M_twoLinear",
            BlockName::MPsdVsP => "M_psdVsP",
            BlockName::MLsLr => "M_lsLr",
            BlockName::NLsLr => "N_lsLr",
        }
    }

    /// Input names in the order [`assemble_named_block`] expects them.
    pub fn inputs(self) -> &'static [&'static str] {
        match self {
            BlockName::M1Bordered => &["A", "B"],
            BlockName::M2Bordered => &["A", "B", "D"],
            BlockName::MTwoCongruence => &["A1", "B1", "A2", "B2"],
            BlockName::NTwoLinear | BlockName::MTwoLinear => &["A", "B", "C", "D"],
            BlockName::MPsdVsP => &["A", "B", "P"],
            BlockName::MLsLr | BlockName::NLsLr => &["A", "B"],
        }
    }

    /// Whether the construction is Hermitian for well-formed inputs.
    pub fn is_hermitian_layout(self) -> bool {
        !matches!(self, BlockName::NTwoLinear)
    }
}

impl fmt::Display for BlockName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BlockName {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        BlockName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown block name {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedBlock {
    pub name: BlockName,
    pub matrix: Matrix,
}

/// `[A B; B* 0]`.
pub fn m1_bordered(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let z = Matrix::zeros(b.cols(), b.cols());
    Matrix::block(&[&[a, b], &[&b.adjoint(), &z]])
}

/// `[A B; B* D]`.
pub fn m2_bordered(a: &Matrix, b: &Matrix, d: &Matrix) -> Result<Matrix> {
    Matrix::block(&[&[a, b], &[&b.adjoint(), d]])
}

/// `[B1 0 A1; 0 -B2 A2; A1* A2* 0]`.
pub fn m_two_congruence(a1: &Matrix, b1: &Matrix, a2: &Matrix, b2: &Matrix) -> Result<Matrix> {
    if a1.cols() != a2.cols() {
        return Err(dim("A1 and A2 must have the same number of columns"));
    }
    let n = a1.cols();
    let (m1, m2) = (a1.rows(), a2.rows());
    Matrix::block(&[
        &[b1, &Matrix::zeros(m1, m2), a1],
        &[&Matrix::zeros(m2, m1), &-b2, a2],
        &[&a1.adjoint(), &a2.adjoint(), &Matrix::zeros(n, n)],
    ])
}

/// `[A B; C D]`.
pub fn n_two_linear(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
    Matrix::block(&[&[a, b], &[c, d]])
}

/// `[AB* 0 A; 0 -CD* C; A* C* 0]`.
pub fn m_two_linear(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
    let ab = a.checked_mul(&b.adjoint())?;
    let cd = c.checked_mul(&d.adjoint())?;
    m_two_congruence(a, &ab, c, &cd)
}

/// `[AB* B; B* P]`.
pub fn m_psd_vs_p(a: &Matrix, b: &Matrix, p: &Matrix) -> Result<Matrix> {
    let ab = a.checked_mul(&b.adjoint())?;
    Matrix::block(&[&[&ab, b], &[&b.adjoint(), p]])
}

/// `[B A; A* 0]`.
pub fn m_ls_lr(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    m1_bordered(b, a)
}

/// `[B BA A; A*B 0 0; A* 0 0]`.
pub fn n_ls_lr(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    let ba = b.checked_mul(a)?;
    let n = a.cols();
    let z = Matrix::zeros(n, n);
    let a_s = a.adjoint();
    Matrix::block(&[&[b, &ba, a], &[&ba.adjoint(), &z, &z], &[&a_s, &z, &z]])
}

fn expect_inputs<'a>(name: BlockName, inputs: &[&'a Matrix]) -> Result<Vec<&'a Matrix>> {
    if inputs.len() != name.inputs().len() {
        return Err(Error::InvalidArgument(format!(
            "{name} takes {} inputs ({}), got {}",
            name.inputs().len(),
            name.inputs().join(", "),
            inputs.len()
        )));
    }
    Ok(inputs.to_vec())
}

/// Assembles one of the named block layouts from its inputs (see [`BlockName::inputs`]).
pub fn assemble_named_block(name: BlockName, inputs: &[&Matrix]) -> Result<NamedBlock> {
    let x = expect_inputs(name, inputs)?;
    let matrix = match name {
        BlockName::M1Bordered => m1_bordered(x[0], x[1])?,
        BlockName::M2Bordered => m2_bordered(x[0], x[1], x[2])?,
        BlockName::MTwoCongruence => m_two_congruence(x[0], x[1], x[2], x[3])?,
        BlockName::NTwoLinear => n_two_linear(x[0], x[1], x[2], x[3])?,
        BlockName::MTwoLinear => m_two_linear(x[0], x[1], x[2], x[3])?,
        BlockName::MPsdVsP => m_psd_vs_p(x[0], x[1], x[2])?,
        BlockName::MLsLr => m_ls_lr(x[0], x[1])?,
        BlockName::NLsLr => n_ls_lr(x[0], x[1])?,
    };
    Ok(NamedBlock { name, matrix })
}

// ---------------------------------------------------------------------------
// identity reports

/// One side of an identity: a rank or an `(i+, i-)` pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IdentityValue {
    Rank(i64),
    Inertia { plus: i64, minus: i64 },
}

impl IdentityValue {
    fn of(i: Inertia) -> Self {
        IdentityValue::Inertia {
            plus: i.plus as i64,
            minus: i.minus as i64,
        }
    }

    fn shift(i: Inertia, dp: i64, dm: i64) -> Self {
        IdentityValue::Inertia {
            plus: i.plus as i64 + dp,
            minus: i.minus as i64 + dm,
        }
    }
}

impl fmt::Display for IdentityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityValue::Rank(r) => write!(f, "{r}"),
            IdentityValue::Inertia { plus, minus } => write!(f, "(+{plus}, -{minus})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub name: String,
    pub lhs: IdentityValue,
    pub rhs: IdentityValue,
    pub holds: bool,
}

impl IdentityReport {
    pub fn new(name: impl Into<String>, lhs: IdentityValue, rhs: IdentityValue) -> Self {
        Self {
            name: name.into(),
            lhs,
            rhs,
            holds: lhs == rhs,
        }
    }

    fn rank(name: &str, lhs: usize, rhs: i64) -> Self {
        Self::new(
            name,
            IdentityValue::Rank(lhs as i64),
            IdentityValue::Rank(rhs),
        )
    }
}

fn r(a: &Matrix) -> i64 {
    rank(a) as i64
}

fn ri(a: &Matrix) -> Inertia {
    inertia_unchecked(a)
}

fn hermitian_arg(a: &Matrix, name: &str) -> Result<()> {
    if a.is_hermitian() {
        Ok(())
    } else {
        Err(Error::NotHermitian(name.to_string()))
    }
}

/// `i±(PAP*) = i±(A)` for nonsingular `P`.
pub fn sylvester_report(a: &Matrix, p: &Matrix) -> Result<IdentityReport> {
    let ia = inertia(a)?;
    if !p.is_square() || p.cols() != a.rows() || rank(p) != p.rows() {
        return Err(Error::InvalidArgument(
            "P must be nonsingular of the order of A".into(),
        ));
    }
    let pap = &(p * a) * &p.adjoint();
    Ok(IdentityReport::new(
        "i±(PAP*) = i±(A)",
        IdentityValue::of(ri(&pap)),
        IdentityValue::of(ia),
    ))
}

/// `i±(λA) = i±(A)` for `λ > 0` and `i∓(A)` for `λ < 0`.
pub fn scaling_report(a: &Matrix, lambda: &Rational) -> Result<IdentityReport> {
    use num_traits::{Signed, Zero};
    let ia = inertia(a)?;
    if lambda.is_zero() {
        return Err(Error::InvalidArgument("λ must be nonzero".into()));
    }
    let expected = if lambda.is_positive() {
        ia
    } else {
        ia.negated()
    };
    Ok(IdentityReport::new(
        "i±(λA) = i±(A) for λ > 0, i∓(A) for λ < 0",
        IdentityValue::of(ri(&a.scale_rational(lambda))),
        IdentityValue::of(expected),
    ))
}

/// `i±(diag(A, B)) = i±(A) + i±(B)`.
pub fn block_diagonal_report(a: &Matrix, b: &Matrix) -> Result<IdentityReport> {
    let ia = inertia(a)?;
    let ib = inertia(b)?;
    let m = Matrix::block(&[
        &[a, &Matrix::zeros(a.rows(), b.cols())],
        &[&Matrix::zeros(b.rows(), a.cols()), b],
    ])?;
    Ok(IdentityReport::new(
        "i±[A, 0; 0, B] = i±(A) + i±(B)",
        IdentityValue::of(ri(&m)),
        IdentityValue::shift(ia, ib.plus as i64, ib.minus as i64),
    ))
}

/// `i+[0 Q; Q* 0] = i-[0 Q; Q* 0] = r(Q)`.
pub fn hyperbolic_report(q: &Matrix) -> IdentityReport {
    let m = m1_bordered(&Matrix::zeros(q.rows(), q.rows()), q).expect("conforming");
    let rq = r(q);
    IdentityReport::new(
        "i±[0, Q; Q*, 0] = r(Q)",
        IdentityValue::of(ri(&m)),
        IdentityValue::Inertia {
            plus: rq,
            minus: rq,
        },
    )
}

/// Rank expansions of `[A, B]`, `[A; C]` and `[A B; C 0]`.
pub fn rank_expansion_report(a: &Matrix, b: &Matrix, c: &Matrix) -> Result<Vec<IdentityReport>> {
    if b.rows() != a.rows() {
        return Err(dim(format!("B has {} rows, A has {}", b.rows(), a.rows())));
    }
    if c.cols() != a.cols() {
        return Err(dim(format!(
            "C has {} columns, A has {}",
            c.cols(),
            a.cols()
        )));
    }
    let pa = pinv(a);
    let pb = pinv(b);
    let pc = pinv(c);
    let ab = Matrix::hstack(&[a, b])?;
    let ac = Matrix::vstack(&[a, c])?;
    let abc0 = Matrix::block(&[&[a, b], &[c, &Matrix::zeros(c.rows(), b.cols())]])?;
    let rab = rank(&ab);
    let rac = rank(&ac);
    Ok(vec![
        IdentityReport::rank(
            "r[A, B] = r(A) + r(E_A B)",
            rab,
            pa.rank as i64 + r(&(&pa.e_proj * b)),
        ),
        IdentityReport::rank(
            "r[A, B] = r(B) + r(E_B A)",
            rab,
            pb.rank as i64 + r(&(&pb.e_proj * a)),
        ),
        IdentityReport::rank(
            "r[A; C] = r(A) + r(C F_A)",
            rac,
            pa.rank as i64 + r(&(c * &pa.f_proj)),
        ),
        IdentityReport::rank(
            "r[A; C] = r(C) + r(A F_C)",
            rac,
            pc.rank as i64 + r(&(a * &pc.f_proj)),
        ),
        IdentityReport::rank(
            "r[A, B; C, 0] = r(B) + r(C) + r(E_B A F_C)",
            rank(&abc0),
            pb.rank as i64 + pc.rank as i64 + r(&(&(&pb.e_proj * a) * &pc.f_proj)),
        ),
    ])
}

/// Inertia expansions of `M1 = [A B; B* 0]` and `M2 = [A B; B* D]`, plus the two
/// conditional forms when their hypotheses (`A ≽ 0`, `R(B) ⊆ R(A)`) hold.
pub fn inertia_expansion_report(a: &Matrix, b: &Matrix, d: &Matrix) -> Result<Vec<IdentityReport>> {
    hermitian_arg(a, "A")?;
    hermitian_arg(d, "D")?;
    if b.rows() != a.rows() || b.cols() != d.rows() {
        return Err(dim("B must be m x n for A m x m and D n x n"));
    }
    let m1 = m1_bordered(a, b)?;
    let m2 = m2_bordered(a, b, d)?;
    let i1 = ri(&m1);
    let i2 = ri(&m2);
    let pa = pinv(a);
    let eb = e_proj(b);
    let rb = r(b);
    let ebaeb = &(&eb * a) * &eb;
    let iebaeb = ri(&ebaeb);
    let ea_b = &pa.e_proj * b;
    let schur = d - &(&(&b.adjoint() * &pa.pinv) * b);
    let inner = m2_bordered(&Matrix::zeros(a.rows(), a.rows()), &ea_b, &schur)?;
    let iinner = ri(&inner);
    let ia = ri(a);
    let mut out = vec![
        IdentityReport::new(
            "i±(M1) = r(B) + i±(E_B A E_B)",
            IdentityValue::of(i1),
            IdentityValue::shift(iebaeb, rb, rb),
        ),
        IdentityReport::rank(
            "r(M1) = 2r(B) + r(E_B A E_B)",
            i1.rank(),
            2 * rb + iebaeb.rank() as i64,
        ),
        IdentityReport::new(
            "i±(M2) = i±(A) + i±[0, E_A B; B* E_A, D - B* A† B]",
            IdentityValue::of(i2),
            IdentityValue::shift(ia, iinner.plus as i64, iinner.minus as i64),
        ),
        IdentityReport::rank(
            "r(M2) = r(A) + r[0, E_A B; B* E_A, D - B* A† B]",
            i2.rank(),
            ia.rank() as i64 + iinner.rank() as i64,
        ),
    ];
    if is_psd(a)? {
        let rab = r(&Matrix::hstack(&[a, b])?);
        out.push(IdentityReport::new(
            "A ≽ 0: i+(M1) = r[A, B], i-(M1) = r(B)",
            IdentityValue::of(i1),
            IdentityValue::Inertia {
                plus: rab,
                minus: rb,
            },
        ));
        out.push(IdentityReport::rank(
            "A ≽ 0: r(M1) = r[A, B] + r(B)",
            i1.rank(),
            rab + rb,
        ));
    }
    if range_included(b, a)? {
        let is = ri(&schur);
        out.push(IdentityReport::new(
            "R(B) ⊆ R(A): i±(M2) = i±(A) + i±(D - B* A† B)",
            IdentityValue::of(i2),
            IdentityValue::shift(ia, is.plus as i64, is.minus as i64),
        ));
        out.push(IdentityReport::rank(
            "R(B) ⊆ R(A): r(M2) = r(A) + r(D - B* A† B)",
            i2.rank(),
            ia.rank() as i64 + is.rank() as i64,
        ));
    }
    Ok(out)
}

/// `r[A B; E_P C 0] = r[A B 0; C 0 P] - r(P)`.
pub fn rank_row_projector_report(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    p: &Matrix,
) -> Result<IdentityReport> {
    let (m, k, l, j) = (a.rows(), b.cols(), c.rows(), p.cols());
    if p.rows() != l {
        return Err(dim("P must have as many rows as C"));
    }
    let epc = e_proj(p).checked_mul(c)?;
    let lhs = Matrix::block(&[&[a, b], &[&epc, &Matrix::zeros(l, k)]])?;
    let rhs = Matrix::block(&[&[a, b, &Matrix::zeros(m, j)], &[c, &Matrix::zeros(l, k), p]])?;
    Ok(IdentityReport::rank(
        "r[A, B; E_P C, 0] = r[A, B, 0; C, 0, P] - r(P)",
        rank(&lhs),
        r(&rhs) - r(p),
    ))
}

/// `r[A B F_Q; C 0] = r[A B; C 0; 0 Q] - r(Q)`.
pub fn rank_col_projector_report(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    q: &Matrix,
) -> Result<IdentityReport> {
    let (n, k, l, j) = (a.cols(), b.cols(), c.rows(), q.rows());
    if q.cols() != k {
        return Err(dim("Q must have as many columns as B"));
    }
    let bfq = b.checked_mul(&f_proj(q))?;
    let lhs = Matrix::block(&[&[a, &bfq], &[c, &Matrix::zeros(l, k)]])?;
    let rhs = Matrix::block(&[
        &[a, b],
        &[c, &Matrix::zeros(l, k)],
        &[&Matrix::zeros(j, n), q],
    ])?;
    Ok(IdentityReport::rank(
        "r[A, B F_Q; C, 0] = r[A, B; C, 0; 0, Q] - r(Q)",
        rank(&lhs),
        r(&rhs) - r(q),
    ))
}

/// `r[A B F_Q; E_P C 0] = r[A B 0; C 0 P; 0 Q 0] - r(P) - r(Q)`.
pub fn rank_two_projector_report(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    p: &Matrix,
    q: &Matrix,
) -> Result<IdentityReport> {
    let (m, n, k, l) = (a.rows(), a.cols(), b.cols(), c.rows());
    if p.rows() != l || q.cols() != k {
        return Err(dim("P must match the rows of C and Q the columns of B"));
    }
    let (pj, qj) = (p.cols(), q.rows());
    let bfq = b.checked_mul(&f_proj(q))?;
    let epc = e_proj(p).checked_mul(c)?;
    let lhs = Matrix::block(&[&[a, &bfq], &[&epc, &Matrix::zeros(l, k)]])?;
    let rhs = Matrix::block(&[
        &[a, b, &Matrix::zeros(m, pj)],
        &[c, &Matrix::zeros(l, k), p],
        &[&Matrix::zeros(qj, n), q, &Matrix::zeros(qj, pj)],
    ])?;
    Ok(IdentityReport::rank(
        "r[A, B F_Q; E_P C, 0] = r[A, B, 0; C, 0, P; 0, Q, 0] - r(P) - r(Q)",
        rank(&lhs),
        r(&rhs) - r(p) - r(q),
    ))
}

/// `i±[A B F_P; F_P B* 0] = i±[A B 0; B* 0 P*; 0 P 0] - r(P)`.
pub fn inertia_col_projector_report(a: &Matrix, b: &Matrix, p: &Matrix) -> Result<IdentityReport> {
    hermitian_arg(a, "A")?;
    let (m, k, l) = (a.rows(), b.cols(), p.rows());
    if b.rows() != m || p.cols() != k {
        return Err(dim("B must be m x k and P l x k"));
    }
    let bfp = b.checked_mul(&f_proj(p))?;
    let lhs = m1_bordered(a, &bfp)?;
    let rhs = Matrix::block(&[
        &[a, b, &Matrix::zeros(m, l)],
        &[&b.adjoint(), &Matrix::zeros(k, k), &p.adjoint()],
        &[&Matrix::zeros(l, m), p, &Matrix::zeros(l, l)],
    ])?;
    let rp = r(p);
    Ok(IdentityReport::new(
        "i±[A, B F_P; F_P B*, 0] = i±[A, B, 0; B*, 0, P*; 0, P, 0] - r(P)",
        IdentityValue::of(ri(&lhs)),
        IdentityValue::shift(ri(&rhs), -rp, -rp),
    ))
}

/// `i±[E_Q A E_Q, E_Q B; B* E_Q, D] = i±[A B Q; B* D 0; Q* 0 0] - r(Q)`.
pub fn inertia_row_projector_report(
    a: &Matrix,
    b: &Matrix,
    d: &Matrix,
    q: &Matrix,
) -> Result<IdentityReport> {
    hermitian_arg(a, "A")?;
    hermitian_arg(d, "D")?;
    let (m, n, l) = (a.rows(), d.rows(), q.cols());
    if b.shape() != (m, n) || q.rows() != m {
        return Err(dim("B must be m x n and Q m x l"));
    }
    let eq = e_proj(q);
    let lhs = m2_bordered(&(&(&eq * a) * &eq), &(&eq * b), d)?;
    let rhs = Matrix::block(&[
        &[a, b, q],
        &[&b.adjoint(), d, &Matrix::zeros(n, l)],
        &[&q.adjoint(), &Matrix::zeros(l, n), &Matrix::zeros(l, l)],
    ])?;
    let rq = r(q);
    Ok(IdentityReport::new(
        "i±[E_Q A E_Q, E_Q B; B* E_Q, D] = i±[A, B, Q; B*, D, 0; Q*, 0, 0] - r(Q)",
        IdentityValue::of(ri(&lhs)),
        IdentityValue::shift(ri(&rhs), -rq, -rq),
    ))
}

/// Every projector expansion whose shape and Hermitian requirements fit the inputs.
///
/// `P` and `Q` play different roles across the five identities, so each identity is
/// emitted only when the given matrices conform to its layout.
pub fn projector_expansion_report(
    a: &Matrix,
    b: &Matrix,
    c: &Matrix,
    d: &Matrix,
    p: &Matrix,
    q: &Matrix,
) -> Result<Vec<IdentityReport>> {
    let rank_ok = b.rows() == a.rows() && c.cols() == a.cols();
    let mut out = Vec::new();
    if rank_ok && p.rows() == c.rows() {
        out.push(rank_row_projector_report(a, b, c, p)?);
    }
    if rank_ok && q.cols() == b.cols() {
        out.push(rank_col_projector_report(a, b, c, q)?);
    }
    if rank_ok && p.rows() == c.rows() && q.cols() == b.cols() {
        out.push(rank_two_projector_report(a, b, c, p, q)?);
    }
    if a.is_hermitian() && b.rows() == a.rows() && p.cols() == b.cols() {
        out.push(inertia_col_projector_report(a, b, p)?);
    }
    if a.is_hermitian()
        && d.is_hermitian()
        && b.shape() == (a.rows(), d.rows())
        && q.rows() == a.rows()
    {
        out.push(inertia_row_projector_report(a, b, d, q)?);
    }
    if out.is_empty() {
        if !a.is_hermitian() && a.is_square() && b.rows() == a.rows() {
            return Err(Error::NotHermitian("A".into()));
        }
        return Err(dim(
            "inputs conform to none of the projector expansion layouts",
        ));
    }
    Ok(out)
}
