//! Löwner-ordering, nonsingularity and set-relation statements about solution sets.
//!
//! Each statement is decided twice: from the extremal profile (max/min rank or
//! inertia hitting `0` or `n`) and from the stated closed condition on the data.
//! A disagreement is reported as [`Error::RouteDisagreement`].

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::blocks::{e_proj, m_psd_vs_p, m_two_congruence, m_two_linear};
use crate::error::{dim, Error, Result};
use crate::extremal::{
    profile_linear_vs_p, profile_ls_vs_lr, profile_psd_linear_vs_p, profile_two_congruence,
    profile_two_linear, Evidence, ExtremalProfile, ProfileReport, Recorder,
};
use crate::linalg::{inertia, range_included, rank, same_range};
use crate::matrix::Matrix;
use crate::scalar::GaussianRational;
use crate::solutions::{check_congruence, CongruenceEqSpec, HermitianFamily, LinearEqSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Succ,
    Succeq,
    Prec,
    Preceq,
    Nonsingular,
    Equal,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::Succ,
        Relation::Succeq,
        Relation::Prec,
        Relation::Preceq,
        Relation::Nonsingular,
        Relation::Equal,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Succ => "succ",
            Relation::Succeq => "succeq",
            Relation::Prec => "prec",
            Relation::Preceq => "preceq",
            Relation::Nonsingular => "nonsingular",
            Relation::Equal => "equal",
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Relation::ALL
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown relation `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exists,
    Forall,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Exists => "exists",
            Mode::Forall => "forall",
        }
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exists" => Ok(Mode::Exists),
            "forall" => Ok(Mode::Forall),
            _ => Err(Error::InvalidArgument(format!("unknown mode `{s}`"))),
        }
    }
}

/// "There is a member with `relation`" or "every member has `relation`", where the
/// relation compares the two sides of the difference (`X` against `P`, `X` against `Y`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OrderingQuery {
    pub relation: Relation,
    pub mode: Mode,
}

impl OrderingQuery {
    pub fn new(relation: Relation, mode: Mode) -> Self {
        Self { relation, mode }
    }

    pub fn exists(relation: Relation) -> Self {
        Self::new(relation, Mode::Exists)
    }

    pub fn forall(relation: Relation) -> Self {
        Self::new(relation, Mode::Forall)
    }

    /// Every query, including the unsupported `forall equal`.
    pub fn all() -> Vec<OrderingQuery> {
        Relation::ALL
            .into_iter()
            .flat_map(|r| [Self::exists(r), Self::forall(r)])
            .collect()
    }

    fn reject_forall_equal(self) -> Result<()> {
        if self == Self::forall(Relation::Equal) {
            return Err(Error::UnsupportedQuery(
                "`forall equal` is not a set relation; ask `exists equal` instead".into(),
            ));
        }
        Ok(())
    }
}

impl fmt::Display for OrderingQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.mode.as_str(), self.relation.as_str())
    }
}

/// What a verdict is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Statement {
    Order(OrderingQuery),
    /// The rank of the difference is the same for all members.
    RankInvariant,
    /// `i+` and `i-` of the difference are the same for all members.
    InertiaInvariant,
    /// The two solution sets coincide.
    SetEquality,
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Statement::Order(q) => q.fmt(f),
            Statement::RankInvariant => f.write_str("rank invariant"),
            Statement::InertiaInvariant => f.write_str("inertia invariant"),
            Statement::SetEquality => f.write_str("set equality"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Route {
    Profile,
    ClosedCondition,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub statement: Statement,
    pub holds: bool,
    pub evidence: Vec<Evidence>,
    pub route: Route,
}

fn ev(label: &str, value: impl TryInto<i64>) -> Evidence {
    Evidence {
        label: label.to_string(),
        value: value.try_into().unwrap_or(i64::MAX),
    }
}

/// Decides `query` from the extremal values alone.
pub fn decide_from_profile(profile: &ExtremalProfile, query: OrderingQuery) -> Result<Verdict> {
    use Mode::*;
    use Relation::*;
    query.reject_forall_equal()?;
    let p = profile;
    let n = p.ambient_order;
    let (field, value, target) = match (query.relation, query.mode) {
        (Succ, Exists) => ("maxIPlus", p.max_i_plus, n),
        (Succ, Forall) => ("minIPlus", p.min_i_plus, n),
        (Prec, Exists) => ("maxIMinus", p.max_i_minus, n),
        (Prec, Forall) => ("minIMinus", p.min_i_minus, n),
        (Succeq, Exists) => ("minIMinus", p.min_i_minus, 0),
        (Succeq, Forall) => ("maxIMinus", p.max_i_minus, 0),
        (Preceq, Exists) => ("minIPlus", p.min_i_plus, 0),
        (Preceq, Forall) => ("maxIPlus", p.max_i_plus, 0),
        (Nonsingular, Exists) => ("maxRank", p.max_rank, n),
        (Nonsingular, Forall) => ("minRank", p.min_rank, n),
        (Equal, Exists) => ("minRank", p.min_rank, 0),
        (Equal, Forall) => unreachable!("rejected above"),
    };
    Ok(Verdict {
        statement: Statement::Order(query),
        holds: value == target,
        evidence: vec![ev(field, value), ev("target", target)],
        route: Route::Profile,
    })
}

/// Combines the two routes, failing when they disagree.
fn agree(
    what: &str,
    statement: Statement,
    closed: bool,
    profile_holds: bool,
    mut evidence: Vec<Evidence>,
) -> Result<Verdict> {
    if closed != profile_holds {
        return Err(Error::RouteDisagreement(format!(
            "{what}, `{statement}`: closed condition says {closed}, profile says {profile_holds}"
        )));
    }
    evidence.push(ev("closed condition", closed as i64));
    Ok(Verdict {
        statement,
        holds: closed,
        evidence,
        route: Route::Both,
    })
}

fn order_verdict(
    what: &str,
    query: OrderingQuery,
    closed: bool,
    report: &ProfileReport,
    evidence: &[Evidence],
) -> Result<Verdict> {
    let pv = decide_from_profile(&report.profile, query)?;
    let mut all = evidence.to_vec();
    all.extend(pv.evidence);
    agree(what, pv.statement, closed, pv.holds, all)
}

fn is_nsd(m: &Matrix) -> Result<bool> {
    Ok(inertia(m)?.plus == 0)
}

fn is_psd(m: &Matrix) -> Result<bool> {
    Ok(inertia(m)?.minus == 0)
}

/// Quantities behind the closed conditions for `X - P`, `X` a Hermitian solution of `AX = B`.
#[derive(Debug, Clone)]
pub struct LinearVsPContext {
    report: ProfileReport,
    evidence: Vec<Evidence>,
    n: i64,
    r_bap: i64,
    r_a: i64,
    r_q: i64,
    q_psd: bool,
    q_nsd: bool,
    ab_minus_apa_nsd: bool,
    range_ap_b_eq_a: bool,
    range_q_eq_a: bool,
    range_bap_eq_q: bool,
    p_solves: bool,
}

impl LinearVsPContext {
    pub fn new(spec: &LinearEqSpec, p: &Matrix) -> Result<Self> {
        let report = profile_linear_vs_p(spec, p)?;
        let (a, b) = (spec.a(), spec.b());
        let ap = a * p;
        let bap = b - &ap;
        let apa = &ap * &a.adjoint();
        let q = &(b * &a.adjoint()) - &apa;
        let mut rec = Recorder::default();
        let r_bap = rec.rank("B - AP", &bap);
        let r_a = rec.rank("A", a);
        let r_q = rec.rank("BA* - APA*", &q);
        let q_psd = rec.flag("BA* ≽ APA*", is_psd(&q)?);
        let q_nsd = rec.flag("BA* ≼ APA*", is_nsd(&q)?);
        // the forall-≺ condition is printed with AB*; equal to BA* on solvable data
        let ab = a * &b.adjoint();
        rec.flag("AB* = BA*", ab == b * &a.adjoint());
        let ab_minus_apa_nsd = rec.flag("AB* ≼ APA*", is_nsd(&(&ab - &apa))?);
        let range_ap_b_eq_a = rec.flag("R(AP - B) = R(A)", same_range(&(-&bap), a)?);
        let range_q_eq_a = rec.flag("R(BA* - APA*) = R(A)", same_range(&q, a)?);
        let range_bap_eq_q = rec.flag("R(B - AP) = R(BA* - APA*)", same_range(&bap, &q)?);
        let p_solves = rec.flag("AP = B", bap.is_zero());
        Ok(Self {
            report,
            evidence: rec.evidence,
            n: spec.n() as i64,
            r_bap,
            r_a,
            r_q,
            q_psd,
            q_nsd,
            ab_minus_apa_nsd,
            range_ap_b_eq_a,
            range_q_eq_a,
            range_bap_eq_q,
            p_solves,
        })
    }

    pub fn profile(&self) -> &ProfileReport {
        &self.report
    }

    pub fn closed(&self, query: OrderingQuery) -> Result<bool> {
        use Mode::*;
        use Relation::*;
        query.reject_forall_equal()?;
        Ok(match (query.relation, query.mode) {
            (Nonsingular, Exists) => self.range_ap_b_eq_a,
            (Nonsingular, Forall) => 2 * self.r_bap == self.r_q + self.n,
            (Succ, Exists) => self.range_q_eq_a && self.q_psd,
            (Prec, Exists) => self.range_q_eq_a && self.q_nsd,
            (Succ, Forall) => self.r_bap == self.n && self.q_psd,
            (Prec, Forall) => self.r_bap == self.n && self.ab_minus_apa_nsd,
            (Succeq, Exists) => self.range_bap_eq_q && self.q_psd,
            (Preceq, Exists) => self.range_bap_eq_q && self.q_nsd,
            (Succeq, Forall) => self.q_psd && self.r_a == self.n,
            (Preceq, Forall) => self.q_nsd && self.r_a == self.n,
            (Equal, Exists) => self.p_solves,
            (Equal, Forall) => unreachable!(),
        })
    }

    pub fn decide(&self, query: OrderingQuery) -> Result<Verdict> {
        let closed = self.closed(query)?;
        order_verdict(
            "X - P over Hermitian solutions",
            query,
            closed,
            &self.report,
            &self.evidence,
        )
    }
}

/// Decides `query` for `X` against `P`, `X` ranging over the Hermitian solutions of `AX = B`.
pub fn decide_linear_vs_p(
    spec: &LinearEqSpec,
    p: &Matrix,
    query: OrderingQuery,
) -> Result<Verdict> {
    LinearVsPContext::new(spec, p)?.decide(query)
}

/// Quantities for `X - P` over the PSD solutions of `AX = B`.
#[derive(Debug, Clone)]
pub struct PsdLinearVsPContext {
    report: ProfileReport,
    evidence: Vec<Evidence>,
    n: i64,
    r_bap: i64,
    r_a: i64,
    r_b: i64,
    q_plus: i64,
    q_psd: bool,
    q_nsd: bool,
    m_plus: i64,
    m_minus: i64,
    range_bap_eq_a: bool,
    range_q_eq_a: bool,
    range_bap_eq_q: bool,
    p_solves: bool,
}

impl PsdLinearVsPContext {
    pub fn new(spec: &LinearEqSpec, p: &Matrix) -> Result<Self> {
        let report = profile_psd_linear_vs_p(spec, p)?;
        let (a, b) = (spec.a(), spec.b());
        let bap = b - &(a * p);
        let q = &bap * &a.adjoint();
        let mut rec = Recorder::default();
        let r_bap = rec.rank("B - AP", &bap);
        let r_a = rec.rank("A", a);
        let r_b = rec.rank("B", b);
        let (q_plus, _) = rec.inertia("BA* - APA*", &q)?;
        let q_psd = rec.flag("BA* ≽ APA*", is_psd(&q)?);
        let q_nsd = rec.flag("BA* ≼ APA*", is_nsd(&q)?);
        let (m_plus, m_minus) = rec.inertia("M", &m_psd_vs_p(a, b, p)?)?;
        let range_bap_eq_a = rec.flag("R(B - AP) = R(A)", same_range(&bap, a)?);
        let range_q_eq_a = rec.flag("R(BA* - APA*) = R(A)", same_range(&q, a)?);
        let range_bap_eq_q = rec.flag("R(B - AP) = R(BA* - APA*)", same_range(&bap, &q)?);
        let p_solves = rec.flag("AP = B", bap.is_zero());
        Ok(Self {
            report,
            evidence: rec.evidence,
            n: spec.n() as i64,
            r_bap,
            r_a,
            r_b,
            q_plus,
            q_psd,
            q_nsd,
            m_plus,
            m_minus,
            range_bap_eq_a,
            range_q_eq_a,
            range_bap_eq_q,
            p_solves,
        })
    }

    pub fn profile(&self) -> &ProfileReport {
        &self.report
    }

    pub fn closed(&self, query: OrderingQuery) -> Result<bool> {
        use Mode::*;
        use Relation::*;
        query.reject_forall_equal()?;
        let n = self.n;
        Ok(match (query.relation, query.mode) {
            (Nonsingular, Exists) => self.range_bap_eq_a,
            (Nonsingular, Forall) => self.m_minus + self.r_bap == self.q_plus + n,
            (Succ, Exists) => self.range_q_eq_a && self.q_psd,
            (Succ, Forall) => self.m_minus == n,
            (Prec, Exists) => self.m_plus == self.r_b + n,
            (Prec, Forall) => self.r_bap == n && self.q_nsd,
            (Succeq, Exists) => self.range_bap_eq_q && self.q_psd,
            (Succeq, Forall) => self.m_plus == self.r_b,
            (Preceq, Exists) => self.m_minus == 0,
            (Preceq, Forall) => self.q_plus == self.r_a - n,
            (Equal, Exists) => self.p_solves,
            (Equal, Forall) => unreachable!(),
        })
    }

    pub fn decide(&self, query: OrderingQuery) -> Result<Verdict> {
        let closed = self.closed(query)?;
        order_verdict(
            "X - P over PSD solutions",
            query,
            closed,
            &self.report,
            &self.evidence,
        )
    }
}

/// Decides `query` for `X` against `P ≽ 0`, `X` ranging over the PSD solutions of `AX = B`.
pub fn decide_psd_linear_vs_p(
    spec: &LinearEqSpec,
    p: &Matrix,
    query: OrderingQuery,
) -> Result<Verdict> {
    PsdLinearVsPContext::new(spec, p)?.decide(query)
}

/// Quantities for `X - Y` with `AX = B` and `CY = D`.
#[derive(Debug, Clone)]
pub struct TwoLinearContext {
    report: ProfileReport,
    evidence: Vec<Evidence>,
    stacked: LinearEqSpec,
    n: i64,
    r_n: i64,
    r_a: i64,
    r_c: i64,
    r_adbc: i64,
    r_ba: i64,
    r_bc: i64,
    m_plus: i64,
    m_minus: i64,
    common: bool,
}

impl TwoLinearContext {
    pub fn new(s1: &LinearEqSpec, s2: &LinearEqSpec) -> Result<Self> {
        let report = profile_two_linear(s1, s2)?;
        let (a, b, c, d) = (s1.a(), s1.b(), s2.a(), s2.b());
        let mut rec = Recorder::default();
        let r_n = rec.rank("N", &Matrix::block(&[&[a, b], &[c, d]])?);
        let r_a = rec.rank("A", a);
        let r_c = rec.rank("C", c);
        let r_adbc = rec.rank("AD* - BC*", &(&(a * &d.adjoint()) - &(b * &c.adjoint())));
        let (a_s, c_s) = (a.adjoint(), c.adjoint());
        let r_ba = rec.rank(
            "[A BA*; C DA*]",
            &Matrix::block(&[&[a, &(b * &a_s)], &[c, &(d * &a_s)]])?,
        );
        let r_bc = rec.rank(
            "[A BC*; C DC*]",
            &Matrix::block(&[&[a, &(b * &c_s)], &[c, &(d * &c_s)]])?,
        );
        let (m_plus, m_minus) = rec.inertia("M", &m_two_linear(a, b, c, d)?)?;
        let stacked = s1.stack(s2)?;
        let (ac, bd) = (stacked.a(), stacked.b());
        let ranges = rec.flag("R[B; D] ⊆ R[A; C]", range_included(bd, ac)?);
        let sym = rec.flag(
            "[A; C][B*, D*] = [B; D][A*, C*]",
            ac * &bd.adjoint() == bd * &ac.adjoint(),
        );
        Ok(Self {
            report,
            evidence: rec.evidence,
            stacked,
            n: s1.n() as i64,
            r_n,
            r_a,
            r_c,
            r_adbc,
            r_ba,
            r_bc,
            m_plus,
            m_minus,
            common: ranges && sym,
        })
    }

    pub fn profile(&self) -> &ProfileReport {
        &self.report
    }

    pub fn closed(&self, query: OrderingQuery) -> Result<bool> {
        use Mode::*;
        use Relation::*;
        query.reject_forall_equal()?;
        let n = self.n;
        let rac = self.r_a + self.r_c;
        Ok(match (query.relation, query.mode) {
            (Nonsingular, Exists) => self.r_n == rac,
            (Nonsingular, Forall) => 2 * self.r_n + self.r_adbc == self.r_ba + self.r_bc + n,
            (Equal, Exists) => self.common,
            (Succ, Exists) => self.m_plus == rac,
            (Prec, Exists) => self.m_minus == rac,
            (Succ, Forall) => self.m_minus == self.r_n - n,
            (Prec, Forall) => self.m_plus == self.r_n - n,
            (Succeq, Exists) => self.m_plus == self.r_n,
            (Preceq, Exists) => self.m_minus == self.r_n,
            (Succeq, Forall) => self.m_minus == rac - n,
            (Preceq, Forall) => self.m_plus == rac - n,
            (Equal, Forall) => unreachable!(),
        })
    }

    /// A common Hermitian solution, when one exists, checked against both equations.
    pub fn common_solution(&self) -> Option<Matrix> {
        let x = HermitianFamily::new(&self.stacked).ok()?.x0;
        (x.is_hermitian() && self.stacked.a() * &x == *self.stacked.b()).then_some(x)
    }

    pub fn decide(&self, query: OrderingQuery) -> Result<Verdict> {
        let closed = self.closed(query)?;
        let mut v = order_verdict(
            "X - Y over two linear equations",
            query,
            closed,
            &self.report,
            &self.evidence,
        )?;
        if query == OrderingQuery::exists(Relation::Equal) && v.holds {
            if self.common_solution().is_none() {
                return Err(Error::RouteDisagreement(
                    "a common solution should exist but the stacked equation gives none".into(),
                ));
            }
            v.evidence.push(ev("common solution verified", 1));
        }
        Ok(v)
    }
}

/// Decides `query` for `X` against `Y`, Hermitian solutions of `AX = B` and `CY = D`.
pub fn decide_two_linear(
    s1: &LinearEqSpec,
    s2: &LinearEqSpec,
    query: OrderingQuery,
) -> Result<Verdict> {
    TwoLinearContext::new(s1, s2)?.decide(query)
}

/// Quantities for `X1 - X2` with `A1 X1 A1* = B1` and `A2 X2 A2* = B2`.
#[derive(Debug, Clone)]
pub struct TwoCongruenceContext {
    report: ProfileReport,
    evidence: Vec<Evidence>,
    n: i64,
    r_m: i64,
    m_plus: i64,
    m_minus: i64,
    r_a1: i64,
    r_a2: i64,
    r12: i64,
    ranges: bool,
}

impl TwoCongruenceContext {
    pub fn new(s1: &CongruenceEqSpec, s2: &CongruenceEqSpec) -> Result<Self> {
        let report = profile_two_congruence(s1, s2)?;
        let (a1, a2) = (s1.a(), s2.a());
        let mut rec = Recorder::default();
        let m = m_two_congruence(a1, s1.b(), a2, s2.b())?;
        let r_m = rec.rank("M", &m);
        let (m_plus, m_minus) = rec.inertia("M", &m)?;
        let r_a1 = rec.rank("A1", a1);
        let r_a2 = rec.rank("A2", a2);
        let r12 = rec.rank(
            "[A1*, A2*]",
            &Matrix::hstack(&[&a1.adjoint(), &a2.adjoint()])?,
        );
        let ranges = rec.flag(
            "R(Bj) ⊆ R(Aj)",
            range_included(s1.b(), a1)? && range_included(s2.b(), a2)?,
        );
        Ok(Self {
            report,
            evidence: rec.evidence,
            n: s1.n() as i64,
            r_m,
            m_plus,
            m_minus,
            r_a1,
            r_a2,
            r12,
            ranges,
        })
    }

    pub fn profile(&self) -> &ProfileReport {
        &self.report
    }

    pub fn closed(&self, query: OrderingQuery) -> Result<bool> {
        use Mode::*;
        use Relation::*;
        query.reject_forall_equal()?;
        let n = self.n;
        let ra = self.r_a1 + self.r_a2;
        Ok(match (query.relation, query.mode) {
            (Nonsingular, Exists) => self.r_m >= 2 * ra - n,
            (Nonsingular, Forall) => self.r_m == 2 * self.r12 + n,
            (Equal, Exists) => self.ranges && self.r_m == 2 * self.r12,
            (Succ, Exists) => self.m_plus == ra,
            (Prec, Exists) => self.m_minus == ra,
            (Succ, Forall) => self.m_plus == self.r12 + n,
            (Prec, Forall) => self.m_minus == self.r12 + n,
            (Succeq, Exists) => self.m_minus == self.r12,
            (Preceq, Exists) => self.m_plus == self.r12,
            (Succeq, Forall) => self.m_minus == ra - n,
            (Preceq, Forall) => self.m_plus == ra - n,
            (Equal, Forall) => unreachable!(),
        })
    }

    pub fn decide(&self, query: OrderingQuery) -> Result<Verdict> {
        let closed = self.closed(query)?;
        order_verdict(
            "X1 - X2 over two congruence equations",
            query,
            closed,
            &self.report,
            &self.evidence,
        )
    }

    fn both_full(&self) -> bool {
        self.r_a1 == self.n && self.r_a2 == self.n
    }

    /// Rank of `X1 - X2` is the same for all members: `r(M) = 2r[A1*, A2*] + n`
    /// or `r(A1) = r(A2) = n`.
    pub fn rank_invariant(&self) -> Result<Verdict> {
        let closed = self.r_m == 2 * self.r12 + self.n || self.both_full();
        let p = &self.report.profile;
        let mut evidence = self.evidence.clone();
        evidence.extend([ev("maxRank", p.max_rank), ev("minRank", p.min_rank)]);
        agree(
            "X1 - X2 over two congruence equations",
            Statement::RankInvariant,
            closed,
            p.max_rank == p.min_rank,
            evidence,
        )
    }

    /// `i+` (equivalently `i-`) of `X1 - X2` is the same for all members iff `r(A1) = r(A2) = n`.
    pub fn inertia_invariant(&self) -> Result<Verdict> {
        let p = &self.report.profile;
        let plus = p.max_i_plus == p.min_i_plus;
        let minus = p.max_i_minus == p.min_i_minus;
        if plus != minus {
            return Err(Error::RouteDisagreement(format!(
                "i+ invariance is {plus} but i- invariance is {minus}"
            )));
        }
        let mut evidence = self.evidence.clone();
        evidence.extend([
            ev("maxIPlus", p.max_i_plus),
            ev("minIPlus", p.min_i_plus),
            ev("maxIMinus", p.max_i_minus),
            ev("minIMinus", p.min_i_minus),
        ]);
        agree(
            "X1 - X2 over two congruence equations",
            Statement::InertiaInvariant,
            self.both_full(),
            plus,
            evidence,
        )
    }
}

/// Decides `query` for `X1` against `X2`, Hermitian solutions of two congruence equations.
pub fn decide_two_congruence(
    s1: &CongruenceEqSpec,
    s2: &CongruenceEqSpec,
    query: OrderingQuery,
) -> Result<Verdict> {
    TwoCongruenceContext::new(s1, s2)?.decide(query)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Invariance {
    Rank,
    Inertia,
}

/// Decides whether the rank (or inertia) of `X1 - X2` is constant over both solution sets.
pub fn decide_two_congruence_invariance(
    s1: &CongruenceEqSpec,
    s2: &CongruenceEqSpec,
    which: Invariance,
) -> Result<Verdict> {
    let ctx = TwoCongruenceContext::new(s1, s2)?;
    match which {
        Invariance::Rank => ctx.rank_invariant(),
        Invariance::Inertia => ctx.inertia_invariant(),
    }
}

fn require_solvable(spec: &CongruenceEqSpec) -> Result<()> {
    let cert = check_congruence(spec);
    if !cert.solvable {
        return Err(Error::Unsolvable(cert.failed().join(", ")));
    }
    Ok(())
}

fn require_t(t: &Matrix, m: usize, name: &str) -> Result<()> {
    if t.cols() != m {
        return Err(dim(format!(
            "{name} must have {m} columns, got {}",
            t.cols()
        )));
    }
    Ok(())
}

/// Real-linear map `X ↦ G X G*` on Hermitian `n x n` matrices, as a real matrix acting on
/// coordinates in the basis `E_ii`, `E_ij + E_ji`, `i(E_ij - E_ji)`.
fn congruence_map(g: &Matrix) -> Matrix {
    let (p, n) = g.shape();
    let mut basis = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in i..n {
            if i == j {
                basis.push(Matrix::from_fn(n, n, |r, c| {
                    GaussianRational::from_int((r == i && c == i) as i64)
                }));
            } else {
                basis.push(Matrix::from_fn(n, n, |r, c| {
                    GaussianRational::from_int(((r, c) == (i, j) || (r, c) == (j, i)) as i64)
                }));
                basis.push(Matrix::from_fn(n, n, |r, c| {
                    if (r, c) == (i, j) {
                        GaussianRational::i()
                    } else if (r, c) == (j, i) {
                        -GaussianRational::i()
                    } else {
                        GaussianRational::default()
                    }
                }));
            }
        }
    }
    let gs = g.adjoint();
    let images: Vec<Matrix> = basis.iter().map(|e| &(g * e) * &gs).collect();
    Matrix::from_fn(2 * p * p, n * n, |row, col| {
        let z = images[col].get((row / 2) / p, (row / 2) % p);
        GaussianRational::real(if row % 2 == 0 {
            z.re().clone()
        } else {
            z.im().clone()
        })
    })
}

/// Real dimension of `{X Hermitian : G X G* = 0}`.
fn kernel_dim(map: &Matrix) -> usize {
    map.cols() - rank(map)
}

/// `S = T` for `S` the Hermitian solutions of `AXA* = B` and `T` those of `TAXA*T* = TBT*`.
///
/// Closed condition `r(TA) = r(A)`; second route compares the real dimensions of the
/// two solution sets (both are translates, and `S ⊆ T`).
pub fn decide_transformed_set_equality(spec: &CongruenceEqSpec, t: &Matrix) -> Result<Verdict> {
    require_solvable(spec)?;
    require_t(t, spec.m(), "T")?;
    let a = spec.a();
    let ta = t * a;
    let mut rec = Recorder::default();
    rec.flag("S ⊆ T", true);
    let r_ta = rec.rank("TA", &ta);
    let r_a = rec.rank("A", a);
    let dim_s = rec.value("dim S", kernel_dim(&congruence_map(a)) as i64);
    let dim_t = rec.value("dim T", kernel_dim(&congruence_map(&ta)) as i64);
    agree(
        "transformed equation",
        Statement::SetEquality,
        r_ta == r_a,
        dim_s == dim_t,
        rec.evidence,
    )
}

/// Existence of `X ∈ S`, `Y ∈ T` with `X ≻ Y` (or `≺`, `≽`, `≼`), `T` the solutions of the
/// transformed equation `TAYA*T* = TBT*`.
///
/// Closed condition: `TA = 0` for the strict relations, always for the others. Second
/// route: the two-congruence profile of `(A, B)` and `(TA, TBT*)`.
pub fn decide_transformed_ordering(
    spec: &CongruenceEqSpec,
    t: &Matrix,
    query: OrderingQuery,
) -> Result<Verdict> {
    require_solvable(spec)?;
    require_t(t, spec.m(), "T")?;
    if query.mode == Mode::Forall {
        return Err(Error::UnsupportedQuery(format!(
            "`{query}` for the transformed equation has no closed characterization"
        )));
    }
    let a = spec.a();
    let ta = t * a;
    let mut rec = Recorder::default();
    let ta_zero = rec.flag("TA = 0", ta.is_zero());
    let closed = match query.relation {
        Relation::Succ | Relation::Prec => ta_zero,
        Relation::Succeq | Relation::Preceq => true,
        Relation::Nonsingular | Relation::Equal => {
            return Err(Error::UnsupportedQuery(format!(
                "`{query}` for the transformed equation has no closed characterization"
            )))
        }
    };
    let tbt = &(t * spec.b()) * &t.adjoint();
    let transformed = CongruenceEqSpec::new(ta, tbt)?;
    let report = profile_two_congruence(spec, &transformed)?;
    rec.evidence.extend(report.evidence.iter().cloned());
    order_verdict(
        "transformed equation",
        query,
        closed,
        &report,
        &rec.evidence,
    )
}

/// `S = T` for `T` the averages `(X1 + X2)/2` of solutions of the two transformed
/// equations `TjAXjA*Tj* = TjBTj*`.
///
/// Closed condition `r[T1A; T2A] = r(T1A) + r(T2A) - r(A)`; second route compares the
/// dimension of `S` with that of the sum of the two solution directions.
pub fn decide_average_equality(
    spec: &CongruenceEqSpec,
    t1: &Matrix,
    t2: &Matrix,
) -> Result<Verdict> {
    let (rec, closed, dims) = average_routes(spec, t1, t2)?;
    agree(
        "average of transformed equations",
        Statement::SetEquality,
        closed,
        dims,
        rec.evidence,
    )
}

fn average_routes(
    spec: &CongruenceEqSpec,
    t1: &Matrix,
    t2: &Matrix,
) -> Result<(Recorder, bool, bool)> {
    require_solvable(spec)?;
    require_t(t1, spec.m(), "T1")?;
    require_t(t2, spec.m(), "T2")?;
    let a = spec.a();
    let (t1a, t2a) = (t1 * a, t2 * a);
    let mut rec = Recorder::default();
    let r_a = rec.rank("A", a);
    let r1 = rec.rank("T1A", &t1a);
    let r2 = rec.rank("T2A", &t2a);
    let r12 = rec.rank("[T1A; T2A]", &Matrix::vstack(&[&t1a, &t2a])?);
    rec.flag("r(T1A) = r(T2A) = r(A)", r1 == r_a && r2 == r_a);
    let closed = r12 == r1 + r2 - r_a;

    let (m1, m2) = (congruence_map(&t1a), congruence_map(&t2a));
    let k1 = kernel_dim(&m1) as i64;
    let k2 = kernel_dim(&m2) as i64;
    let k12 = kernel_dim(&Matrix::vstack(&[&m1, &m2])?) as i64;
    let dim_s = rec.value("dim S", kernel_dim(&congruence_map(a)) as i64);
    let dim_t = rec.value("dim T", k1 + k2 - k12);
    Ok((rec, closed, dim_s == dim_t))
}

/// Row partition `A = [A1; A2]` (with `A1` the first `m1` rows): `S = T` iff `R(A1*) = R(A2*)`.
pub fn decide_row_partition_average(spec: &CongruenceEqSpec, m1: usize) -> Result<Verdict> {
    let m = spec.m();
    if m1 > m {
        return Err(dim(format!("partition row {m1} exceeds {m}")));
    }
    let t1 = Matrix::hstack(&[&Matrix::identity(m1), &Matrix::zeros(m1, m - m1)])?;
    let t2 = Matrix::hstack(&[&Matrix::zeros(m - m1, m1), &Matrix::identity(m - m1)])?;
    let (mut rec, general, dims) = average_routes(spec, &t1, &t2)?;
    let a = spec.a();
    let a1 = a.slice(0, 0, m1, a.cols());
    let a2 = a.slice(m1, 0, m - m1, a.cols());
    let partition = rec.flag("R(A1*) = R(A2*)", same_range(&a1.adjoint(), &a2.adjoint())?);
    if partition != general {
        return Err(Error::RouteDisagreement(format!(
            "row partition: R(A1*) = R(A2*) is {partition}, rank equality is {general}"
        )));
    }
    agree(
        "row partition average",
        Statement::SetEquality,
        general,
        dims,
        rec.evidence,
    )
}

/// Sum decomposition `A = A1 + A2` with `T1 = E_{A2}`, `T2 = E_{A1}`:
/// `S = T` iff `r[A1 0 A2; 0 A2 A1] = 2r[A1, A2] - r(A)`.
pub fn decide_sum_decomposition_average(spec: &CongruenceEqSpec, a1: &Matrix) -> Result<Verdict> {
    let a = spec.a();
    if a1.shape() != a.shape() {
        return Err(dim("A1 must have the shape of A"));
    }
    let a2 = a - a1;
    let (mut rec, general, dims) = average_routes(spec, &e_proj(&a2), &e_proj(a1))?;
    let z1 = Matrix::zeros(a.rows(), a.cols());
    let big = rec.rank(
        "[A1 0 A2; 0 A2 A1]",
        &Matrix::block(&[&[a1, &z1, &a2], &[&z1, &a2, a1]])?,
    );
    let r12 = rec.rank("[A1, A2]", &Matrix::hstack(&[a1, &a2])?);
    let r_a = rank(a) as i64;
    let sum = big == 2 * r12 - r_a;
    if sum != general {
        return Err(Error::RouteDisagreement(format!(
            "sum decomposition: block rank condition is {sum}, rank equality is {general}"
        )));
    }
    agree(
        "sum decomposition average",
        Statement::SetEquality,
        general,
        dims,
        rec.evidence,
    )
}

/// Quantities for `X - Y`, `X` least-squares and `Y` least-rank Hermitian solutions of `AXA* = B`.
#[derive(Debug, Clone)]
pub struct LsVsLrContext {
    report: ProfileReport,
    evidence: Vec<Evidence>,
    n: i64,
    r_a: i64,
    r_ab: i64,
    r_m: i64,
    m_plus: i64,
    m_minus: i64,
    r_n: i64,
    n_plus: i64,
    n_minus: i64,
    /// `r[A, BA]` and `R(BA) ⊆ R(A)`, present when `B ≽ 0`.
    psd: Option<(i64, bool)>,
    a_zero: bool,
}

impl LsVsLrContext {
    pub fn new(spec: &CongruenceEqSpec) -> Result<Self> {
        let report = profile_ls_vs_lr(spec)?;
        let (a, b) = (spec.a(), spec.b());
        let mut rec = Recorder::default();
        let m = crate::blocks::m_ls_lr(a, b)?;
        let nn = crate::blocks::n_ls_lr(a, b)?;
        let r_m = rec.rank("M", &m);
        let (m_plus, m_minus) = rec.inertia("M", &m)?;
        let r_n = rec.rank("N", &nn);
        let (n_plus, n_minus) = rec.inertia("N", &nn)?;
        let r_a = rec.rank("A", a);
        let r_ab = rec.rank("[A, B]", &Matrix::hstack(&[a, b])?);
        let a_zero = rec.flag("A = 0", a.is_zero());
        let psd = if rec.flag("B ≽ 0", is_psd(b)?) {
            let ba = b * a;
            let r = rec.rank("[A, BA]", &Matrix::hstack(&[a, &ba])?);
            let inc = rec.flag("R(BA) ⊆ R(A)", range_included(&ba, a)?);
            Some((r, inc))
        } else {
            None
        };
        Ok(Self {
            report,
            evidence: rec.evidence,
            n: spec.n() as i64,
            r_a,
            r_ab,
            r_m,
            m_plus,
            m_minus,
            r_n,
            n_plus,
            n_minus,
            psd,
            a_zero,
        })
    }

    pub fn profile(&self) -> &ProfileReport {
        &self.report
    }

    fn general(&self, query: OrderingQuery) -> bool {
        use Mode::*;
        use Relation::*;
        let n = self.n;
        let (ra, rab) = (self.r_a, self.r_ab);
        match (query.relation, query.mode) {
            (Nonsingular, Exists) => self.r_n >= 2 * ra + self.r_m - n,
            (Nonsingular, Forall) => self.r_n + self.r_m == 2 * rab + 2 * ra + n,
            (Equal, Exists) => self.r_n + self.r_m == 2 * rab + 2 * ra,
            (Succ, Exists) => self.n_minus == self.m_minus + ra,
            (Succ, Forall) => self.n_minus == ra + rab - self.m_plus + n,
            (Succeq, Exists) => self.n_plus == ra + rab - self.m_minus,
            (Succeq, Forall) => self.n_plus == self.m_plus + ra - n,
            (Prec, Exists) => self.n_plus == self.m_plus + ra,
            (Prec, Forall) => self.n_plus == ra + rab - self.m_minus + n,
            (Preceq, Exists) => self.n_minus == ra + rab - self.m_plus,
            (Preceq, Forall) => self.n_minus == self.m_minus + ra - n,
            (Equal, Forall) => unreachable!(),
        }
    }

    /// The `B ≽ 0` conditions; `None` when that branch gives no separate condition.
    fn simplified(&self, query: OrderingQuery) -> Option<bool> {
        use Mode::*;
        use Relation::*;
        let (raba, inc) = self.psd?;
        let (n, ra) = (self.n, self.r_a);
        Some(match (query.relation, query.mode) {
            (Nonsingular, Exists) => raba >= 3 * ra - n,
            (Nonsingular, Forall) => raba == ra + n,
            (Equal, Exists) => inc,
            (Succ, Exists) => raba == 2 * ra,
            (Succ, Forall) => raba == ra + n,
            (Succeq, Exists) => true,
            (Succeq, Forall) => ra == n,
            (Prec, Exists) => self.a_zero,
            (Preceq, Exists) => inc,
            (Preceq, Forall) => raba == 2 * ra - n,
            (Prec, Forall) | (Equal, Forall) => return None,
        })
    }

    pub fn closed(&self, query: OrderingQuery) -> Result<bool> {
        query.reject_forall_equal()?;
        let general = self.general(query);
        if let Some(s) = self.simplified(query) {
            if s != general {
                return Err(Error::RouteDisagreement(format!(
                    "least squares vs least rank, `{query}`: B ≽ 0 condition says {s}, general condition says {general}"
                )));
            }
        }
        Ok(general)
    }

    pub fn decide(&self, query: OrderingQuery) -> Result<Verdict> {
        let closed = self.closed(query)?;
        order_verdict(
            "least squares vs least rank",
            query,
            closed,
            &self.report,
            &self.evidence,
        )
    }
}

/// Decides `query` for least-squares `X` against least-rank `Y`.
pub fn decide_ls_vs_lr(spec: &CongruenceEqSpec, query: OrderingQuery) -> Result<Verdict> {
    LsVsLrContext::new(spec)?.decide(query)
}

/// Implications that any family of verdicts on a nonempty set must respect:
/// `∃≻ ⇒ ∃≽`, `∀≻ ⇒ ∀≽ ⇒ ∃≽`, the duals, and `∀ nonsingular ⇒ ∃ nonsingular`.
pub fn monotone_violations(results: &HashMap<OrderingQuery, bool>) -> Vec<String> {
    use Relation::*;
    let get = |r, m| results.get(&OrderingQuery::new(r, m)).copied();
    let mut out = Vec::new();
    let mut imply = |a: (Relation, Mode), b: (Relation, Mode)| {
        if let (Some(true), Some(false)) = (get(a.0, a.1), get(b.0, b.1)) {
            out.push(format!(
                "{} holds but {} fails",
                OrderingQuery::new(a.0, a.1),
                OrderingQuery::new(b.0, b.1)
            ));
        }
    };
    for (strict, weak) in [(Succ, Succeq), (Prec, Preceq)] {
        imply((strict, Mode::Exists), (weak, Mode::Exists));
        imply((strict, Mode::Forall), (weak, Mode::Forall));
        imply((weak, Mode::Forall), (weak, Mode::Exists));
        imply((strict, Mode::Forall), (strict, Mode::Exists));
    }
    imply((Nonsingular, Mode::Forall), (Nonsingular, Mode::Exists));
    out
}

/// All supported queries decided through `decide`, with monotonicity checked.
pub fn decide_all(decide: impl Fn(OrderingQuery) -> Result<Verdict>) -> Result<Vec<Verdict>> {
    let mut verdicts = Vec::new();
    for q in OrderingQuery::all() {
        match decide(q) {
            Ok(v) => verdicts.push(v),
            Err(Error::UnsupportedQuery(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let map: HashMap<OrderingQuery, bool> = verdicts
        .iter()
        .filter_map(|v| match v.statement {
            Statement::Order(q) => Some((q, v.holds)),
            _ => None,
        })
        .collect();
    let bad = monotone_violations(&map);
    if !bad.is_empty() {
        return Err(Error::RouteDisagreement(bad.join("; ")));
    }
    Ok(verdicts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Relation::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_ints(rows)
    }

    fn lin(a: Matrix, b: Matrix) -> LinearEqSpec {
        LinearEqSpec::new(a, b).unwrap()
    }

    fn cong(a: Matrix, b: Matrix) -> CongruenceEqSpec {
        CongruenceEqSpec::new(a, b).unwrap()
    }

    #[test]
    fn profile_route_examples() {
        let p = ExtremalProfile {
            max_rank: 2,
            min_rank: 0,
            max_i_plus: 2,
            min_i_plus: 0,
            max_i_minus: 1,
            min_i_minus: 0,
            ambient_order: 2,
        };
        assert!(
            decide_from_profile(&p, OrderingQuery::exists(Succ))
                .unwrap()
                .holds
        );
        assert!(
            decide_from_profile(&p, OrderingQuery::exists(Equal))
                .unwrap()
                .holds
        );
        let zero = ExtremalProfile::constant(0, 0, 2);
        assert!(
            decide_from_profile(&zero, OrderingQuery::forall(Succeq))
                .unwrap()
                .holds
        );
        assert!(
            decide_from_profile(&zero, OrderingQuery::forall(Preceq))
                .unwrap()
                .holds
        );
        assert!(
            !decide_from_profile(&zero, OrderingQuery::exists(Succ))
                .unwrap()
                .holds
        );
        assert!(matches!(
            decide_from_profile(&zero, OrderingQuery::forall(Equal)),
            Err(Error::UnsupportedQuery(_))
        ));
    }

    #[test]
    fn linear_vs_p_examples() {
        let spec = lin(m(&[&[1, 0]]), m(&[&[1, 0]]));
        let z = Matrix::zeros(2, 2);
        let v = decide_linear_vs_p(&spec, &z, OrderingQuery::exists(Succeq)).unwrap();
        assert!(v.holds);
        assert_eq!(v.route, Route::Both);
        assert!(
            !decide_linear_vs_p(&spec, &z, OrderingQuery::forall(Succ))
                .unwrap()
                .holds
        );
        let b = m(&[&[2, 1], &[1, 1]]);
        let spec = lin(Matrix::identity(2), b);
        assert!(
            decide_linear_vs_p(&spec, &z, OrderingQuery::forall(Succ))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn psd_linear_vs_p_examples() {
        let spec = lin(m(&[&[1, 0]]), m(&[&[1, 0]]));
        let z = Matrix::zeros(2, 2);
        assert!(
            !decide_psd_linear_vs_p(&spec, &z, OrderingQuery::exists(Preceq))
                .unwrap()
                .holds
        );
        let p = m(&[&[1, 0], &[0, 2]]);
        assert!(
            decide_psd_linear_vs_p(&spec, &p, OrderingQuery::exists(Equal))
                .unwrap()
                .holds
        );
        let i = Matrix::identity(2);
        let spec = lin(i.clone(), i.clone());
        assert!(
            decide_psd_linear_vs_p(&spec, &i, OrderingQuery::forall(Succeq))
                .unwrap()
                .holds
        );
        assert!(
            decide_psd_linear_vs_p(&spec, &i, OrderingQuery::forall(Preceq))
                .unwrap()
                .holds
        );
    }

    #[test]
    fn psd_forall_preceq_needs_full_column_rank() {
        // i+(BA*) = 1 = n - r(A), yet diag(1, 0) is a PSD solution that is not ≼ 0
        let spec = lin(m(&[&[1, 0]]), m(&[&[1, 0]]));
        let z = Matrix::zeros(2, 2);
        let v = decide_psd_linear_vs_p(&spec, &z, OrderingQuery::forall(Preceq)).unwrap();
        assert!(!v.holds);
        assert_eq!(v.route, Route::Both);
    }

    #[test]
    fn two_linear_examples() {
        let s = lin(m(&[&[1, 1]]), m(&[&[2, 0]]));
        let v = decide_two_linear(&s, &s, OrderingQuery::exists(Equal)).unwrap();
        assert!(v.holds);
        assert!(v
            .evidence
            .iter()
            .any(|e| e.label == "common solution verified"));
        let s1 = lin(m(&[&[1]]), m(&[&[1]]));
        let s2 = lin(m(&[&[1]]), m(&[&[0]]));
        assert!(
            decide_two_linear(&s1, &s2, OrderingQuery::forall(Succ))
                .unwrap()
                .holds
        );
        assert!(
            !decide_two_linear(&s1, &s2, OrderingQuery::exists(Prec))
                .unwrap()
                .holds
        );
        assert!(matches!(
            decide_two_linear(&s1, &s2, OrderingQuery::forall(Equal)),
            Err(Error::UnsupportedQuery(_))
        ));
    }

    #[test]
    fn two_congruence_examples() {
        let s1 = cong(m(&[&[1]]), m(&[&[1]]));
        let s2 = cong(m(&[&[1]]), m(&[&[0]]));
        assert!(
            decide_two_congruence(&s1, &s2, OrderingQuery::forall(Succ))
                .unwrap()
                .holds
        );
        let s = cong(m(&[&[1, 2]]), m(&[&[4]]));
        assert!(
            decide_two_congruence(&s, &s, OrderingQuery::exists(Equal))
                .unwrap()
                .holds
        );

        let a = cong(Matrix::identity(2), m(&[&[1, 0], &[0, 2]]));
        let b = cong(Matrix::identity(2), m(&[&[0, 1], &[1, 0]]));
        assert!(
            decide_two_congruence_invariance(&a, &b, Invariance::Inertia)
                .unwrap()
                .holds
        );
        assert!(
            decide_two_congruence_invariance(&a, &b, Invariance::Rank)
                .unwrap()
                .holds
        );
        let c = cong(m(&[&[1, 0]]), m(&[&[1]]));
        assert!(
            !decide_two_congruence_invariance(&a, &c, Invariance::Inertia)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn transformed_examples() {
        let spec = cong(m(&[&[1, 0], &[0, 0]]), m(&[&[1, 0], &[0, 0]]));
        assert!(
            decide_transformed_set_equality(&spec, &Matrix::identity(2))
                .unwrap()
                .holds
        );
        assert!(
            !decide_transformed_set_equality(&spec, &m(&[&[0, 1]]))
                .unwrap()
                .holds
        );
        let a = m(&[&[1, 2], &[0, 1], &[1, 1]]);
        let spec = cong(a.clone(), &(&a * &m(&[&[1, 0], &[0, -1]])) * &a.adjoint());
        assert!(
            decide_transformed_set_equality(&spec, &a.adjoint())
                .unwrap()
                .holds
        );

        let t0 = Matrix::zeros(1, 3);
        assert!(
            decide_transformed_ordering(&spec, &t0, OrderingQuery::exists(Succ))
                .unwrap()
                .holds
        );
        let i3 = Matrix::identity(3);
        assert!(
            !decide_transformed_ordering(&spec, &i3, OrderingQuery::exists(Succ))
                .unwrap()
                .holds
        );
        assert!(
            decide_transformed_ordering(&spec, &i3, OrderingQuery::exists(Succeq))
                .unwrap()
                .holds
        );
        assert!(matches!(
            decide_transformed_ordering(&spec, &i3, OrderingQuery::forall(Succeq)),
            Err(Error::UnsupportedQuery(_))
        ));
    }

    #[test]
    fn average_examples() {
        let a = m(&[&[1, 0], &[0, 1]]);
        let spec = cong(a, m(&[&[1, 0], &[0, 3]]));
        let i = Matrix::identity(2);
        assert!(decide_average_equality(&spec, &i, &i).unwrap().holds);
        assert!(!decide_row_partition_average(&spec, 1).unwrap().holds);
        // T2 = 0 leaves X2 free, so the averages fill everything unless A = 0
        assert!(
            !decide_average_equality(&spec, &i, &Matrix::zeros(2, 2))
                .unwrap()
                .holds
        );
        let z = cong(Matrix::zeros(2, 2), Matrix::zeros(2, 2));
        assert!(
            decide_average_equality(&z, &i, &Matrix::zeros(2, 2))
                .unwrap()
                .holds
        );

        let a = m(&[&[1, 1], &[2, 2]]);
        let spec = cong(a.clone(), Matrix::zeros(2, 2));
        assert!(decide_row_partition_average(&spec, 1).unwrap().holds);
        let a1 = m(&[&[1, 0], &[0, 0]]);
        decide_sum_decomposition_average(&spec, &a1).unwrap();
    }

    #[test]
    fn ls_vs_lr_examples() {
        let b = m(&[&[2, 1], &[1, 1]]);
        let spec = cong(m(&[&[1], &[1]]), b.clone());
        assert!(
            decide_ls_vs_lr(&spec, OrderingQuery::exists(Succeq))
                .unwrap()
                .holds
        );
        assert!(
            !decide_ls_vs_lr(&spec, OrderingQuery::exists(Prec))
                .unwrap()
                .holds
        );
        let spec = cong(Matrix::identity(2), b);
        assert!(
            decide_ls_vs_lr(&spec, OrderingQuery::exists(Equal))
                .unwrap()
                .holds
        );
        assert_eq!(decide_all(|q| decide_ls_vs_lr(&spec, q)).unwrap().len(), 11);
    }

    #[test]
    fn monotone_checker_flags_violations() {
        let mut map = HashMap::new();
        map.insert(OrderingQuery::exists(Succ), true);
        map.insert(OrderingQuery::exists(Succeq), false);
        assert_eq!(monotone_violations(&map).len(), 1);
    }
}
