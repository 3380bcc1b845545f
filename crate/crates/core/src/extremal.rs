//! Closed-form extremal ranks and inertias of Hermitian matrix expressions over
//! solution sets.
//!
//! Every operation returns a [`ProfileReport`]: the six extremal values plus the
//! block ranks and inertias that produced them.

use serde::{Deserialize, Serialize};

use crate::blocks::{m1_bordered, m_ls_lr, m_psd_vs_p, m_two_congruence, m_two_linear, n_ls_lr};
use crate::error::{dim, Error, Result};
use crate::linalg::{inertia, range_included, rank, require_hermitian};
use crate::matrix::Matrix;
use crate::solutions::{
    check_congruence, check_linear_hermitian, check_linear_psd, CongruenceEqSpec, HermitianFamily,
    LinearEqSpec, PsdFamily,
};

/// Max/min of rank, `i+` and `i-` of a Hermitian quantity of order `ambient_order`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ExtremalProfile {
    pub max_rank: usize,
    pub min_rank: usize,
    pub max_i_plus: usize,
    pub min_i_plus: usize,
    pub max_i_minus: usize,
    pub min_i_minus: usize,
    pub ambient_order: usize,
}

impl ExtremalProfile {
    /// Profile of a fixed matrix with the given inertia.
    pub fn constant(plus: usize, minus: usize, order: usize) -> Self {
        Self {
            max_rank: plus + minus,
            min_rank: plus + minus,
            max_i_plus: plus,
            min_i_plus: plus,
            max_i_minus: minus,
            min_i_minus: minus,
            ambient_order: order,
        }
    }

    /// Field names paired with values, in a fixed order.
    pub fn fields(&self) -> [(&'static str, usize); 6] {
        [
            ("maxRank", self.max_rank),
            ("minRank", self.min_rank),
            ("maxIPlus", self.max_i_plus),
            ("minIPlus", self.min_i_plus),
            ("maxIMinus", self.max_i_minus),
            ("minIMinus", self.min_i_minus),
        ]
    }

    /// The ordering constraints every correct profile satisfies:
    /// `minI+ + minI- ≤ minRank ≤ maxRank ≤ min(n, maxI+ + maxI-)` and `min ≤ max`.
    pub fn is_coherent(&self) -> bool {
        self.min_i_plus <= self.max_i_plus
            && self.min_i_minus <= self.max_i_minus
            && self.min_i_plus + self.min_i_minus <= self.min_rank
            && self.min_rank <= self.max_rank
            && self.max_rank <= self.ambient_order.min(self.max_i_plus + self.max_i_minus)
    }
}

impl std::fmt::Display for ExtremalProfile {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "rank [{}, {}]  i+ [{}, {}]  i- [{}, {}]  (order {})",
            self.min_rank,
            self.max_rank,
            self.min_i_plus,
            self.max_i_plus,
            self.min_i_minus,
            self.max_i_minus,
            self.ambient_order
        )
    }
}

/// A labelled integer that went into a decision.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Evidence {
    pub label: String,
    pub value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileReport {
    pub profile: ExtremalProfile,
    pub evidence: Vec<Evidence>,
    /// Second evaluation through a specialised formula set, when one applies.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub simplified: Option<ExtremalProfile>,
}

#[derive(Debug, Default)]
pub(crate) struct Recorder {
    pub(crate) evidence: Vec<Evidence>,
}

impl Recorder {
    pub(crate) fn value(&mut self, label: impl Into<String>, value: i64) -> i64 {
        self.evidence.push(Evidence {
            label: label.into(),
            value,
        });
        value
    }

    pub(crate) fn rank(&mut self, label: &str, m: &Matrix) -> i64 {
        self.value(format!("r({label})"), rank(m) as i64)
    }

    pub(crate) fn inertia(&mut self, label: &str, m: &Matrix) -> Result<(i64, i64)> {
        let i = inertia(m)?;
        let p = self.value(format!("i+({label})"), i.plus as i64);
        let q = self.value(format!("i-({label})"), i.minus as i64);
        Ok((p, q))
    }

    pub(crate) fn flag(&mut self, label: &str, holds: bool) -> bool {
        self.value(label, holds as i64);
        holds
    }
}

/// Raw formula values in profile field order.
struct Raw {
    max_rank: i64,
    min_rank: i64,
    max_i_plus: i64,
    min_i_plus: i64,
    max_i_minus: i64,
    min_i_minus: i64,
}

impl Raw {
    fn finish(self, n: usize) -> Result<ExtremalProfile> {
        let check = |quantity: &str, value: i64| -> Result<usize> {
            if value < 0 || value > n as i64 {
                return Err(Error::FormulaRange {
                    quantity: quantity.to_string(),
                    value,
                    order: n,
                });
            }
            Ok(value as usize)
        };
        Ok(ExtremalProfile {
            max_rank: check("maxRank", self.max_rank)?,
            min_rank: check("minRank", self.min_rank)?,
            max_i_plus: check("maxIPlus", self.max_i_plus)?,
            min_i_plus: check("minIPlus", self.min_i_plus)?,
            max_i_minus: check("maxIMinus", self.max_i_minus)?,
            min_i_minus: check("minIMinus", self.min_i_minus)?,
            ambient_order: n,
        })
    }
}

fn report(rec: Recorder, profile: ExtremalProfile) -> ProfileReport {
    ProfileReport {
        profile,
        evidence: rec.evidence,
        simplified: None,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Cone {
    None,
    Psd,
}

/// `A ± BXB*` (and `- CYC*` when `C` is given) with `A` Hermitian.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionSpec {
    a: Matrix,
    b: Matrix,
    c: Option<Matrix>,
    sign: Sign,
    cone: Cone,
}

impl CompletionSpec {
    pub fn new(a: Matrix, b: Matrix, c: Option<Matrix>, sign: Sign, cone: Cone) -> Result<Self> {
        if !a.is_square() {
            return Err(dim("A must be square"));
        }
        require_hermitian(&a, "A")?;
        if b.rows() != a.rows() {
            return Err(dim(format!("B must have {} rows", a.rows())));
        }
        if let Some(c) = &c {
            if c.rows() != a.rows() {
                return Err(dim(format!("C must have {} rows", a.rows())));
            }
        }
        Ok(Self {
            a,
            b,
            c,
            sign,
            cone,
        })
    }

    pub fn hermitian(a: Matrix, b: Matrix) -> Result<Self> {
        Self::new(a, b, None, Sign::Minus, Cone::None)
    }

    pub fn psd(a: Matrix, b: Matrix, sign: Sign) -> Result<Self> {
        Self::new(a, b, None, sign, Cone::Psd)
    }

    pub fn two(a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        Self::new(a, b, Some(c), Sign::Minus, Cone::None)
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn c(&self) -> Option<&Matrix> {
        self.c.as_ref()
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn cone(&self) -> Cone {
        self.cone
    }
}

/// `A - BXB*` over Hermitian `X`. The sign is immaterial since `X ↦ -X` is onto.
pub fn profile_completion_hermitian(spec: &CompletionSpec) -> Result<ProfileReport> {
    if spec.cone != Cone::None || spec.c.is_some() {
        return Err(Error::InvalidArgument(
            "Hermitian completion takes no cone constraint and no C".into(),
        ));
    }
    let (a, b) = (&spec.a, &spec.b);
    let mut rec = Recorder::default();
    let rab = rec.rank("[A, B]", &Matrix::hstack(&[a, b])?);
    let m = m1_bordered(a, b)?;
    let rm = rec.rank("M", &m);
    let (ip, im) = rec.inertia("M", &m)?;
    let p = Raw {
        max_rank: rab,
        min_rank: 2 * rab - rm,
        max_i_plus: ip,
        min_i_plus: rab - im,
        max_i_minus: im,
        min_i_minus: rab - ip,
    }
    .finish(a.rows())?;
    Ok(report(rec, p))
}

/// `A ± BXB*` over `X ≽ 0`.
pub fn profile_completion_psd(spec: &CompletionSpec) -> Result<ProfileReport> {
    if spec.cone != Cone::Psd || spec.c.is_some() {
        return Err(Error::InvalidArgument(
            "PSD completion needs the psd cone and no C".into(),
        ));
    }
    let (a, b) = (&spec.a, &spec.b);
    let mut rec = Recorder::default();
    let rab = rec.rank("[A, B]", &Matrix::hstack(&[a, b])?);
    let (ap, am) = rec.inertia("A", a)?;
    let (mp, mm) = rec.inertia("M", &m1_bordered(a, b)?)?;
    let raw = match spec.sign {
        Sign::Plus => Raw {
            max_rank: rab,
            min_rank: ap + rab - mp,
            max_i_plus: mp,
            min_i_plus: ap,
            max_i_minus: am,
            min_i_minus: rab - mp,
        },
        Sign::Minus => Raw {
            max_rank: rab,
            min_rank: am + rab - mm,
            max_i_plus: ap,
            min_i_plus: rab - mm,
            max_i_minus: mm,
            min_i_minus: am,
        },
    };
    Ok(report(rec, raw.finish(a.rows())?))
}

/// `A - BXB* - CYC*` over Hermitian `X`, `Y`.
pub fn profile_completion_two(spec: &CompletionSpec) -> Result<ProfileReport> {
    let c = match (&spec.c, spec.cone) {
        (Some(c), Cone::None) => c,
        _ => {
            return Err(Error::InvalidArgument(
                "two-term completion needs C and no cone constraint".into(),
            ))
        }
    };
    let (a, b) = (&spec.a, &spec.b);
    let (nb, nc) = (b.cols(), c.cols());
    let mut rec = Recorder::default();
    let rabc = rec.rank("[A, B, C]", &Matrix::hstack(&[a, b, c])?);
    let cs = c.adjoint();
    let bs = b.adjoint();
    let r1 = rec.rank(
        "[A B; C* 0]",
        &Matrix::block(&[&[a, b], &[&cs, &Matrix::zeros(nc, nb)]])?,
    );
    let r2 = rec.rank(
        "[A B C; B* 0 0]",
        &Matrix::block(&[
            &[a, b, c],
            &[&bs, &Matrix::zeros(nb, nb), &Matrix::zeros(nb, nc)],
        ])?,
    );
    let r3 = rec.rank(
        "[A B C; C* 0 0]",
        &Matrix::block(&[
            &[a, b, c],
            &[&cs, &Matrix::zeros(nc, nb), &Matrix::zeros(nc, nc)],
        ])?,
    );
    let bc = Matrix::hstack(&[b, c])?;
    let big = m1_bordered(a, &bc)?;
    let (ip, im) = rec.inertia("[A B C; B* 0 0; C* 0 0]", &big)?;
    let p = Raw {
        max_rank: rabc,
        min_rank: 2 * rabc + r1 - r2 - r3,
        max_i_plus: ip,
        min_i_plus: rabc - im,
        max_i_minus: im,
        min_i_minus: rabc - ip,
    }
    .finish(a.rows())?;
    Ok(report(rec, p))
}

/// `A - BXC - (BXC)*` over arbitrary `X`, or `A - BX - (BX)*` when `c` is `None`.
///
/// With `C` present the formulas need `R(B) ⊆ R(C*)`.
pub fn profile_skew_pair(a: &Matrix, b: &Matrix, c: Option<&Matrix>) -> Result<ProfileReport> {
    if !a.is_square() {
        return Err(dim("A must be square"));
    }
    require_hermitian(a, "A")?;
    let m_ord = a.rows();
    if b.rows() != m_ord {
        return Err(dim(format!("B must have {m_ord} rows")));
    }
    let mut rec = Recorder::default();
    let mm = m1_bordered(a, b)?;
    let rm = rec.rank("[A B; B* 0]", &mm);
    let (ip, im) = rec.inertia("[A B; B* 0]", &mm)?;
    let raw = match c {
        Some(c) => {
            if c.cols() != m_ord {
                return Err(dim(format!("C must have {m_ord} columns")));
            }
            let cs = c.adjoint();
            if !range_included(b, &cs)? {
                return Err(Error::RangeHypothesisViolated("R(B) ⊄ R(C*)".into()));
            }
            let rac = rec.rank("[A, C*]", &Matrix::hstack(&[a, &cs])?);
            let rabc = rec.rank(
                "[A B; C 0]",
                &Matrix::block(&[&[a, b], &[c, &Matrix::zeros(c.rows(), b.cols())]])?,
            );
            Raw {
                max_rank: rac.min(rm),
                min_rank: 2 * rac + rm - 2 * rabc,
                max_i_plus: ip,
                min_i_plus: rac + ip - rabc,
                max_i_minus: im,
                min_i_minus: rac + im - rabc,
            }
        }
        None => {
            let rb = rec.rank("B", b);
            Raw {
                max_rank: (m_ord as i64).min(rm),
                min_rank: rm - 2 * rb,
                max_i_plus: ip,
                min_i_plus: ip - rb,
                max_i_minus: im,
                min_i_minus: im - rb,
            }
        }
    };
    Ok(report(rec, raw.finish(m_ord)?))
}

/// `X1 - X2` with `A1 X1 A1* = B1` and `A2 X2 A2* = B2`.
pub fn profile_two_congruence(
    s1: &CongruenceEqSpec,
    s2: &CongruenceEqSpec,
) -> Result<ProfileReport> {
    if s1.n() != s2.n() {
        return Err(dim("both equations need the same unknown order"));
    }
    for (i, s) in [s1, s2].iter().enumerate() {
        if !check_congruence(s).solvable {
            return Err(Error::Unsolvable(format!(
                "equation {} has no Hermitian solution",
                i + 1
            )));
        }
    }
    let n = s1.n() as i64;
    let (a1, a2) = (s1.a(), s2.a());
    let mut rec = Recorder::default();
    let m = m_two_congruence(a1, s1.b(), a2, s2.b())?;
    let rm = rec.rank("M", &m);
    let (ip, im) = rec.inertia("M", &m)?;
    let ra1 = rec.rank("A1", a1);
    let ra2 = rec.rank("A2", a2);
    let r12 = rec.rank(
        "[A1*, A2*]",
        &Matrix::hstack(&[&a1.adjoint(), &a2.adjoint()])?,
    );
    let p = Raw {
        max_rank: n.min(rm + 2 * n - 2 * ra1 - 2 * ra2),
        min_rank: rm - 2 * r12,
        max_i_plus: ip + n - ra1 - ra2,
        min_i_plus: ip - r12,
        max_i_minus: im + n - ra1 - ra2,
        min_i_minus: im - r12,
    }
    .finish(s1.n())?;
    Ok(report(rec, p))
}

fn require_p(p: &Matrix, n: usize) -> Result<()> {
    if p.shape() != (n, n) {
        return Err(dim(format!(
            "P is {}x{}, expected {n}x{n}",
            p.rows(),
            p.cols()
        )));
    }
    require_hermitian(p, "P")
}

/// Shared quantities `r(B - AP)`, `r(A)` and `i±(BA* - APA*)`.
fn vs_p_terms(rec: &mut Recorder, spec: &LinearEqSpec, p: &Matrix) -> Result<(i64, i64, i64, i64)> {
    let (a, b) = (spec.a(), spec.b());
    let bap = b - &(a * p);
    let q = &bap * &a.adjoint();
    let rbap = rec.rank("B - AP", &bap);
    let ra = rec.rank("A", a);
    let (qp, qm) = rec.inertia("BA* - APA*", &q)?;
    Ok((rbap, ra, qp, qm))
}

/// `X - P` over the Hermitian solutions of `AX = B`.
pub fn profile_linear_vs_p(spec: &LinearEqSpec, p: &Matrix) -> Result<ProfileReport> {
    let cert = check_linear_hermitian(spec);
    if !cert.solvable {
        return Err(Error::Unsolvable(cert.failed().join(", ")));
    }
    let n = spec.n();
    require_p(p, n)?;
    let mut rec = Recorder::default();
    let (rbap, ra, qp, qm) = vs_p_terms(&mut rec, spec, p)?;
    let n = n as i64;
    let prof = Raw {
        max_rank: rbap - ra + n,
        min_rank: 2 * rbap - (qp + qm),
        max_i_plus: qp - ra + n,
        min_i_plus: rbap - qm,
        max_i_minus: qm - ra + n,
        min_i_minus: rbap - qp,
    }
    .finish(spec.n())?;
    Ok(report(rec, prof))
}

/// `X - P` over the PSD solutions of `AX = B`, for `P ≽ 0`.
pub fn profile_psd_linear_vs_p(spec: &LinearEqSpec, p: &Matrix) -> Result<ProfileReport> {
    let cert = check_linear_psd(spec);
    if !cert.solvable {
        return Err(Error::Unsolvable(cert.failed().join(", ")));
    }
    let n = spec.n();
    require_p(p, n)?;
    if inertia(p)?.minus != 0 {
        return Err(Error::NotPsd("P".into()));
    }
    let mut rec = Recorder::default();
    let (rbap, ra, qp, _) = vs_p_terms(&mut rec, spec, p)?;
    let rb = rec.rank("B", spec.b());
    let (mp, mm) = rec.inertia("M", &m_psd_vs_p(spec.a(), spec.b(), p)?)?;
    let n = n as i64;
    let prof = Raw {
        max_rank: rbap - ra + n,
        min_rank: mm + rbap - qp,
        max_i_plus: qp - ra + n,
        min_i_plus: mm,
        max_i_minus: mp - rb,
        min_i_minus: rbap - qp,
    }
    .finish(spec.n())?;
    Ok(report(rec, prof))
}

/// `X - Y` with `AX = B`, `CY = D`, both over Hermitian matrices.
pub fn profile_two_linear(s1: &LinearEqSpec, s2: &LinearEqSpec) -> Result<ProfileReport> {
    if s1.n() != s2.n() {
        return Err(dim("both equations need the same unknown order"));
    }
    for (i, s) in [s1, s2].iter().enumerate() {
        if !check_linear_hermitian(s).solvable {
            return Err(Error::Unsolvable(format!(
                "equation {} has no Hermitian solution",
                i + 1
            )));
        }
    }
    let (a, b, c, d) = (s1.a(), s1.b(), s2.a(), s2.b());
    let mut rec = Recorder::default();
    let rn = rec.rank("N", &Matrix::block(&[&[a, b], &[c, d]])?);
    let ra = rec.rank("A", a);
    let rc = rec.rank("C", c);
    let (ip, im) = rec.inertia("M", &m_two_linear(a, b, c, d)?)?;
    let r_adbc = rec.rank("AD* - BC*", &(&(a * &d.adjoint()) - &(b * &c.adjoint())));
    let a_s = a.adjoint();
    let c_s = c.adjoint();
    let r_ba = rec.rank(
        "[A BA*; C DA*]",
        &Matrix::block(&[&[a, &(b * &a_s)], &[c, &(d * &a_s)]])?,
    );
    let r_bc = rec.rank(
        "[A BC*; C DC*]",
        &Matrix::block(&[&[a, &(b * &c_s)], &[c, &(d * &c_s)]])?,
    );
    let n = s1.n() as i64;
    let prof = Raw {
        max_rank: n + rn - ra - rc,
        min_rank: 2 * rn + r_adbc - r_ba - r_bc,
        max_i_plus: n + ip - ra - rc,
        min_i_plus: rn - im,
        max_i_minus: n + im - ra - rc,
        min_i_minus: rn - ip,
    }
    .finish(s1.n())?;
    Ok(report(rec, prof))
}

/// `X - Y` with `X` a least-squares and `Y` a least-rank Hermitian solution of `AXA* = B`.
///
/// When `B ≽ 0` the simplified formulas are evaluated too and must agree.
pub fn profile_ls_vs_lr(spec: &CongruenceEqSpec) -> Result<ProfileReport> {
    let (a, b) = (spec.a(), spec.b());
    let n = spec.n() as i64;
    let mut rec = Recorder::default();
    let m = m_ls_lr(a, b)?;
    let nn = n_ls_lr(a, b)?;
    let rm = rec.rank("M", &m);
    let (mp, mm) = rec.inertia("M", &m)?;
    let rnn = rec.rank("N", &nn);
    let (np, nm) = rec.inertia("N", &nn)?;
    let ra = rec.rank("A", a);
    let rab = rec.rank("[A, B]", &Matrix::hstack(&[a, b])?);
    let prof = Raw {
        max_rank: n.min(2 * n + rnn - 2 * ra - rm),
        min_rank: rnn + rm - 2 * rab - 2 * ra,
        max_i_plus: nm + n - ra - mm,
        min_i_plus: nm + mp - rab - ra,
        max_i_minus: np + n - ra - mp,
        min_i_minus: np + mm - rab - ra,
    }
    .finish(spec.n())?;
    let mut simplified = None;
    if rec.flag("B ≽ 0", inertia(b)?.minus == 0) {
        let raba = rec.rank("[A, BA]", &Matrix::hstack(&[a, &(b * a)])?);
        let s = Raw {
            max_rank: n.min(2 * n + raba - 3 * ra),
            min_rank: raba - ra,
            max_i_plus: raba + n - 2 * ra,
            min_i_plus: raba - ra,
            max_i_minus: n - ra,
            min_i_minus: 0,
        }
        .finish(spec.n())?;
        if s != prof {
            return Err(Error::RouteDisagreement(format!(
                "B ≽ 0 formulas give {s}, general formulas give {prof}"
            )));
        }
        simplified = Some(s);
    }
    Ok(ProfileReport {
        profile: prof,
        evidence: rec.evidence,
        simplified,
    })
}

/// [`profile_linear_vs_p`] recomputed as the completion `(X0 - P) + F_A U F_A`.
pub fn linear_vs_p_via_completion(spec: &LinearEqSpec, p: &Matrix) -> Result<ExtremalProfile> {
    let fam = HermitianFamily::new(spec)?;
    require_p(p, spec.n())?;
    let c = CompletionSpec::hermitian(&fam.x0 - p, fam.f)?;
    Ok(profile_completion_hermitian(&c)?.profile)
}

/// [`profile_psd_linear_vs_p`] recomputed as the completion `(X0 - P) + F_A U F_A`, `U ≽ 0`.
pub fn psd_linear_vs_p_via_completion(spec: &LinearEqSpec, p: &Matrix) -> Result<ExtremalProfile> {
    let fam = PsdFamily::new(spec)?;
    require_p(p, spec.n())?;
    let c = CompletionSpec::psd(&fam.x0 - p, fam.f, Sign::Plus)?;
    Ok(profile_completion_psd(&c)?.profile)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    fn prof(v: [usize; 6], n: usize) -> ExtremalProfile {
        ExtremalProfile {
            max_rank: v[0],
            min_rank: v[1],
            max_i_plus: v[2],
            min_i_plus: v[3],
            max_i_minus: v[4],
            min_i_minus: v[5],
            ambient_order: n,
        }
    }

    #[test]
    fn completion_hermitian_examples() {
        let s = CompletionSpec::hermitian(m(&[&[2]]), m(&[&[1]])).unwrap();
        assert_eq!(
            profile_completion_hermitian(&s).unwrap().profile,
            prof([1, 0, 1, 0, 1, 0], 1)
        );

        let a = m(&[&[1, 2], &[2, -1]]);
        let s = CompletionSpec::hermitian(a.clone(), Matrix::zeros(2, 3)).unwrap();
        let i = inertia(&a).unwrap();
        assert_eq!(
            profile_completion_hermitian(&s).unwrap().profile,
            ExtremalProfile::constant(i.plus, i.minus, 2)
        );

        let s = CompletionSpec::hermitian(Matrix::zeros(2, 2), Matrix::identity(2)).unwrap();
        assert_eq!(
            profile_completion_hermitian(&s).unwrap().profile,
            prof([2, 0, 2, 0, 2, 0], 2)
        );
        let bad = CompletionSpec::hermitian(m(&[&[0, 1], &[0, 0]]), Matrix::identity(2));
        assert!(matches!(bad, Err(Error::NotHermitian(_))));
    }

    #[test]
    fn completion_psd_examples() {
        let s = CompletionSpec::psd(m(&[&[1]]), m(&[&[1]]), Sign::Minus).unwrap();
        let p = profile_completion_psd(&s).unwrap().profile;
        assert_eq!((p.max_i_plus, p.min_i_minus), (1, 0));

        let s = CompletionSpec::psd(Matrix::zeros(3, 3), Matrix::identity(3), Sign::Plus).unwrap();
        let p = profile_completion_psd(&s).unwrap().profile;
        assert_eq!((p.min_i_plus, p.max_i_plus), (0, 3));

        let a = m(&[&[1, 0], &[0, -2]]);
        for sign in [Sign::Plus, Sign::Minus] {
            let s = CompletionSpec::psd(a.clone(), Matrix::zeros(2, 1), sign).unwrap();
            assert_eq!(
                profile_completion_psd(&s).unwrap().profile,
                ExtremalProfile::constant(1, 1, 2)
            );
        }
    }

    #[test]
    fn completion_two_examples() {
        let a = m(&[&[1, 1], &[1, 0]]);
        let b = m(&[&[1], &[2]]);
        let one =
            profile_completion_hermitian(&CompletionSpec::hermitian(a.clone(), b.clone()).unwrap())
                .unwrap()
                .profile;
        let two = profile_completion_two(&CompletionSpec::two(a, b, Matrix::zeros(2, 2)).unwrap())
            .unwrap()
            .profile;
        assert_eq!(one, two);

        let s = CompletionSpec::two(
            Matrix::zeros(2, 2),
            Matrix::identity(2),
            Matrix::identity(2),
        )
        .unwrap();
        let p = profile_completion_two(&s).unwrap().profile;
        assert_eq!((p.min_rank, p.max_rank), (0, 2));
    }

    #[test]
    fn skew_pair_examples() {
        let a = m(&[&[1, 2], &[2, 0]]);
        let p = profile_skew_pair(&a, &Matrix::identity(2), None)
            .unwrap()
            .profile;
        assert_eq!((p.min_rank, p.max_i_plus, p.max_i_minus), (0, 2, 2));

        let p = profile_skew_pair(&a, &Matrix::zeros(2, 1), None)
            .unwrap()
            .profile;
        let i = inertia(&a).unwrap();
        assert_eq!(p, ExtremalProfile::constant(i.plus, i.minus, 2));

        let b = m(&[&[1], &[1]]);
        let plain = profile_skew_pair(&a, &b, None).unwrap().profile;
        let with_c = profile_skew_pair(&a, &b, Some(&Matrix::identity(2)))
            .unwrap()
            .profile;
        assert_eq!(plain, with_c);

        let c = m(&[&[1, 0]]);
        assert!(matches!(
            profile_skew_pair(&a, &m(&[&[0], &[1]]), Some(&c)),
            Err(Error::RangeHypothesisViolated(_))
        ));
    }

    #[test]
    fn two_congruence_examples() {
        let s1 = CongruenceEqSpec::new(m(&[&[1]]), m(&[&[1]])).unwrap();
        let s2 = CongruenceEqSpec::new(m(&[&[1]]), m(&[&[0]])).unwrap();
        let r = profile_two_congruence(&s1, &s2).unwrap();
        assert_eq!(r.profile, prof([1, 1, 1, 1, 0, 0], 1));
        assert!(r.evidence.contains(&Evidence {
            label: "i+(M)".into(),
            value: 2
        }));

        let a = m(&[&[1, 1, 0]]);
        let s = CongruenceEqSpec::new(a, m(&[&[3]])).unwrap();
        assert_eq!(profile_two_congruence(&s, &s).unwrap().profile.min_rank, 0);

        let b1 = m(&[&[2, 1], &[1, 0]]);
        let b2 = m(&[&[1, 0], &[0, 1]]);
        let s1 = CongruenceEqSpec::new(Matrix::identity(2), b1.clone()).unwrap();
        let s2 = CongruenceEqSpec::new(Matrix::identity(2), b2.clone()).unwrap();
        let i = inertia(&(&b1 - &b2)).unwrap();
        assert_eq!(
            profile_two_congruence(&s1, &s2).unwrap().profile,
            ExtremalProfile::constant(i.plus, i.minus, 2)
        );
    }

    #[test]
    fn linear_vs_p_examples() {
        let spec = LinearEqSpec::new(m(&[&[1, 0]]), m(&[&[1, 0]])).unwrap();
        let z = Matrix::zeros(2, 2);
        assert_eq!(
            profile_linear_vs_p(&spec, &z).unwrap().profile,
            prof([2, 1, 2, 1, 1, 0], 2)
        );
        assert_eq!(
            profile_psd_linear_vs_p(&spec, &z).unwrap().profile,
            prof([2, 1, 2, 1, 0, 0], 2)
        );

        let p = m(&[&[1, 0], &[0, 5]]);
        assert_eq!(profile_linear_vs_p(&spec, &p).unwrap().profile.min_rank, 0);
        assert_eq!(
            profile_psd_linear_vs_p(&spec, &p).unwrap().profile.min_rank,
            0
        );

        let b = m(&[&[2, 1], &[1, 1]]);
        let spec = LinearEqSpec::new(Matrix::identity(2), b.clone()).unwrap();
        let p = m(&[&[0, 0], &[0, 3]]);
        let i = inertia(&(&b - &p)).unwrap();
        let fixed = ExtremalProfile::constant(i.plus, i.minus, 2);
        assert_eq!(profile_linear_vs_p(&spec, &p).unwrap().profile, fixed);
        assert_eq!(profile_psd_linear_vs_p(&spec, &p).unwrap().profile, fixed);

        assert!(matches!(
            profile_linear_vs_p(&spec, &m(&[&[0, 1], &[0, 0]])),
            Err(Error::NotHermitian(_))
        ));
        assert!(matches!(
            profile_psd_linear_vs_p(&spec, &m(&[&[-1, 0], &[0, 0]])),
            Err(Error::NotPsd(_))
        ));
    }

    #[test]
    fn derivation_routes_agree_on_examples() {
        let spec = LinearEqSpec::new(m(&[&[1, 0]]), m(&[&[1, 0]])).unwrap();
        for p in [
            Matrix::zeros(2, 2),
            m(&[&[1, 1], &[1, 3]]),
            m(&[&[2, 0], &[0, 0]]),
        ] {
            assert_eq!(
                profile_linear_vs_p(&spec, &p).unwrap().profile,
                linear_vs_p_via_completion(&spec, &p).unwrap()
            );
            assert_eq!(
                profile_psd_linear_vs_p(&spec, &p).unwrap().profile,
                psd_linear_vs_p_via_completion(&spec, &p).unwrap()
            );
        }
    }

    #[test]
    fn two_linear_examples() {
        let s1 = LinearEqSpec::new(m(&[&[1]]), m(&[&[1]])).unwrap();
        let s2 = LinearEqSpec::new(m(&[&[1]]), m(&[&[0]])).unwrap();
        assert_eq!(
            profile_two_linear(&s1, &s2).unwrap().profile,
            prof([1, 1, 1, 1, 0, 0], 1)
        );

        let s = LinearEqSpec::new(m(&[&[1, 2, 0]]), m(&[&[1, 0, 1]])).unwrap();
        assert_eq!(profile_two_linear(&s, &s).unwrap().profile.min_rank, 0);

        let b = m(&[&[1, 1], &[1, 1]]);
        let d = m(&[&[0, 1], &[1, 0]]);
        let s1 = LinearEqSpec::new(Matrix::identity(2), b.clone()).unwrap();
        let s2 = LinearEqSpec::new(Matrix::identity(2), d.clone()).unwrap();
        let i = inertia(&(&b - &d)).unwrap();
        assert_eq!(
            profile_two_linear(&s1, &s2).unwrap().profile,
            ExtremalProfile::constant(i.plus, i.minus, 2)
        );
    }

    #[test]
    fn ls_vs_lr_examples() {
        let s = CongruenceEqSpec::new(Matrix::identity(2), m(&[&[1, 2], &[2, 1]])).unwrap();
        assert_eq!(
            profile_ls_vs_lr(&s).unwrap().profile,
            ExtremalProfile::constant(0, 0, 2)
        );

        let s = CongruenceEqSpec::new(m(&[&[1], &[0]]), m(&[&[0, 1], &[1, 0]])).unwrap();
        let r = profile_ls_vs_lr(&s).unwrap();
        assert_eq!(r.profile, prof([1, 0, 1, 0, 1, 0], 1));
        assert!(r.simplified.is_none());

        let s = CongruenceEqSpec::new(m(&[&[1], &[0]]), Matrix::identity(2)).unwrap();
        let r = profile_ls_vs_lr(&s).unwrap();
        assert_eq!(r.profile, ExtremalProfile::constant(0, 0, 1));
        assert_eq!(r.simplified, Some(r.profile));
    }

    #[test]
    fn unsolvable_inputs_are_rejected() {
        let bad = LinearEqSpec::new(m(&[&[1, 0], &[0, 0]]), m(&[&[0, 0], &[1, 0]])).unwrap();
        assert!(matches!(
            profile_linear_vs_p(&bad, &Matrix::zeros(2, 2)),
            Err(Error::Unsolvable(_))
        ));
        let ok = LinearEqSpec::new(Matrix::identity(2), Matrix::identity(2)).unwrap();
        assert!(matches!(
            profile_two_linear(&bad, &ok),
            Err(Error::Unsolvable(_))
        ));
        let c = CongruenceEqSpec::new(Matrix::zeros(1, 1), m(&[&[1]])).unwrap();
        assert!(matches!(
            profile_two_congruence(&c, &c),
            Err(Error::Unsolvable(_))
        ));
    }
}
