//! Instance generation and sampling-based verification of the closed forms.
//!
//! Instances are solvable by construction. Envelopes sweep the free parameters of a
//! solution family (zero draw, small integer grid, random rationals and large pushes
//! along the free directions) and compare observed rank and inertia with the profile.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blocks::{
    block_diagonal_report, e_proj, hyperbolic_report, inertia_col_projector_report,
    inertia_expansion_report, inertia_row_projector_report, rank_col_projector_report,
    rank_expansion_report, rank_row_projector_report, rank_two_projector_report, scaling_report,
    sylvester_report, IdentityReport,
};
use crate::error::{Error, Result};
use crate::extremal::{
    profile_completion_hermitian, profile_completion_psd, profile_completion_two,
    profile_linear_vs_p, profile_ls_vs_lr, profile_psd_linear_vs_p, profile_skew_pair,
    profile_two_congruence, profile_two_linear, CompletionSpec, ExtremalProfile, ProfileReport,
    Sign,
};
use crate::intmat::ScaledMatrix;
use crate::linalg::{pinv_matrix, rank};
use crate::matrix::Matrix;
use crate::ordering::{
    decide_ls_vs_lr, decide_row_partition_average, decide_transformed_set_equality,
    decide_two_linear, OrderingQuery, Relation,
};
use crate::sample::{derive_seed, Sampler};
use crate::scalar::{ratio, GaussianRational};
use crate::solutions::{
    hermitian_solution, psd_solution, CongruenceEqSpec, CongruenceFamily, HermitianFamily,
    LeastRankFamily, LinearEqSpec, PsdFamily,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum RecipeKind {
    LinearHermitian,
    LinearPsd,
    Congruence,
    TwoLinear,
    TwoCongruence,
    LsLr,
    Completion,
    CompletionTwo,
    SkewPair,
}

/// Seeded description of a random instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct InstanceRecipe {
    pub seed: u64,
    pub m: usize,
    pub n: usize,
    pub kind: RecipeKind,
    pub bound: i64,
}

impl InstanceRecipe {
    pub fn new(seed: u64, m: usize, n: usize, kind: RecipeKind, bound: i64) -> Self {
        Self {
            seed,
            m,
            n,
            kind,
            bound,
        }
    }

    /// Dimensions drawn from `1..=max_dim`.
    pub fn random(seed: u64, kind: RecipeKind, max_dim: usize, bound: i64) -> Self {
        let mut s = Sampler::new(derive_seed(seed, u64::MAX), 1);
        let top = max_dim.max(1) as i64;
        let m = s.integer(1, top) as usize;
        let n = s.integer(1, top) as usize;
        Self::new(seed, m, n, kind, bound)
    }
}

/// A generated instance. Linear kinds carry the comparison matrix `P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Instance {
    LinearHermitian {
        a: Matrix,
        b: Matrix,
        p: Matrix,
    },
    LinearPsd {
        a: Matrix,
        b: Matrix,
        p: Matrix,
    },
    Congruence {
        a: Matrix,
        b: Matrix,
    },
    TwoLinear {
        a: Matrix,
        b: Matrix,
        c: Matrix,
        d: Matrix,
    },
    TwoCongruence {
        a1: Matrix,
        b1: Matrix,
        a2: Matrix,
        b2: Matrix,
    },
    LsLr {
        a: Matrix,
        b: Matrix,
    },
    Completion {
        a: Matrix,
        b: Matrix,
        sign: Sign,
    },
    CompletionTwo {
        a: Matrix,
        b: Matrix,
        c: Matrix,
    },
    SkewPair {
        a: Matrix,
        b: Matrix,
        c: Option<Matrix>,
    },
}

impl Instance {
    fn matrices(&self) -> Vec<&Matrix> {
        match self {
            Instance::LinearHermitian { a, b, p } | Instance::LinearPsd { a, b, p } => {
                vec![a, b, p]
            }
            Instance::Congruence { a, b }
            | Instance::LsLr { a, b }
            | Instance::Completion { a, b, .. } => {
                vec![a, b]
            }
            Instance::TwoLinear { a, b, c, d } => vec![a, b, c, d],
            Instance::TwoCongruence { a1, b1, a2, b2 } => vec![a1, b1, a2, b2],
            Instance::CompletionTwo { a, b, c } => vec![a, b, c],
            Instance::SkewPair { a, b, c } => {
                let mut v = vec![a, b];
                v.extend(c.as_ref());
                v
            }
        }
    }

    pub fn is_real(&self) -> bool {
        self.matrices().iter().all(|m| m.is_real())
    }
}

fn herm_any(s: &mut Sampler, n: usize) -> Matrix {
    if s.coin(0.3) {
        return s.hermitian(n);
    }
    let r = s.integer(0, n as i64) as usize;
    let f = s.matrix(n, r);
    let d: Vec<i64> = (0..r).map(|_| *s.pick(&[-2, -1, 1, 2])).collect();
    &(&f * &Matrix::diag_ints(&d)) * &f.adjoint()
}

fn psd_any(s: &mut Sampler, n: usize) -> Matrix {
    let k = s.integer(0, n as i64) as usize;
    s.gram(n, k)
}

/// Builds the instance described by `recipe`; identical recipes give identical instances.
pub fn generate_instance(recipe: &InstanceRecipe) -> Instance {
    let mut s = Sampler::new(recipe.seed, recipe.bound).den_bound(1);
    let complex = s.coin(0.3);
    s.set_complex(complex);
    let (m, n) = (recipe.m, recipe.n);
    let other = |s: &mut Sampler| s.integer(1, m.max(n) as i64) as usize;
    match recipe.kind {
        RecipeKind::LinearHermitian => {
            let a = s.any_rank(m, n);
            let x0 = herm_any(&mut s, n);
            let b = &a * &x0;
            let p = match s.integer(0, 7) {
                0 | 1 => x0,
                2 => Matrix::zeros(n, n),
                _ => herm_any(&mut s, n),
            };
            Instance::LinearHermitian { a, b, p }
        }
        RecipeKind::LinearPsd => {
            let a = s.any_rank(m, n);
            let x0 = psd_any(&mut s, n);
            let b = &a * &x0;
            let p = match s.integer(0, 7) {
                0 | 1 => x0,
                2 => Matrix::zeros(n, n),
                _ => psd_any(&mut s, n),
            };
            Instance::LinearPsd { a, b, p }
        }
        RecipeKind::Congruence => {
            let a = s.any_rank(m, n);
            let x0 = herm_any(&mut s, n);
            let b = &(&a * &x0) * &a.adjoint();
            Instance::Congruence { a, b }
        }
        RecipeKind::TwoLinear => {
            let m2 = other(&mut s);
            let a = s.any_rank(m, n);
            let c = s.any_rank(m2, n);
            let x0 = herm_any(&mut s, n);
            let y0 = if s.coin(0.25) {
                x0.clone()
            } else {
                herm_any(&mut s, n)
            };
            let (b, d) = (&a * &x0, &c * &y0);
            Instance::TwoLinear { a, b, c, d }
        }
        RecipeKind::TwoCongruence => {
            let m2 = other(&mut s);
            let a1 = s.any_rank(m, n);
            let a2 = s.any_rank(m2, n);
            let x1 = herm_any(&mut s, n);
            let x2 = if s.coin(0.25) {
                x1.clone()
            } else {
                herm_any(&mut s, n)
            };
            let b1 = &(&a1 * &x1) * &a1.adjoint();
            let b2 = &(&a2 * &x2) * &a2.adjoint();
            Instance::TwoCongruence { a1, b1, a2, b2 }
        }
        RecipeKind::LsLr => {
            let a = s.any_rank(m, n);
            let b = if s.coin(0.35) {
                psd_any(&mut s, m)
            } else {
                herm_any(&mut s, m)
            };
            Instance::LsLr { a, b }
        }
        RecipeKind::Completion => {
            let a = herm_any(&mut s, m);
            let b = s.any_rank(m, n);
            let sign = if s.coin(0.5) { Sign::Plus } else { Sign::Minus };
            Instance::Completion { a, b, sign }
        }
        RecipeKind::CompletionTwo => {
            let k = other(&mut s);
            let a = herm_any(&mut s, m);
            let b = s.any_rank(m, n);
            let c = s.any_rank(m, k);
            Instance::CompletionTwo { a, b, c }
        }
        RecipeKind::SkewPair => {
            let a = herm_any(&mut s, m);
            if s.coin(0.5) {
                let p = other(&mut s);
                let c = s.any_rank(p, m);
                let w = s.any_rank(p, n);
                let b = &c.adjoint() * &w;
                Instance::SkewPair { a, b, c: Some(c) }
            } else {
                let b = s.any_rank(m, n);
                Instance::SkewPair { a, b, c: None }
            }
        }
    }
}

/// The nine closed-form profile operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum ProfileKind {
    CompletionHermitian,
    CompletionPsd,
    CompletionTwo,
    SkewPair,
    TwoCongruence,
    LinearVsP,
    PsdLinearVsP,
    TwoLinear,
    LsVsLr,
}

impl ProfileKind {
    pub const ALL: [ProfileKind; 9] = [
        ProfileKind::CompletionHermitian,
        ProfileKind::CompletionPsd,
        ProfileKind::CompletionTwo,
        ProfileKind::SkewPair,
        ProfileKind::TwoCongruence,
        ProfileKind::LinearVsP,
        ProfileKind::PsdLinearVsP,
        ProfileKind::TwoLinear,
        ProfileKind::LsVsLr,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ProfileKind::CompletionHermitian => "completion",
            ProfileKind::CompletionPsd => "completion-psd",
            ProfileKind::CompletionTwo => "completion-two",
            ProfileKind::SkewPair => "skew",
            ProfileKind::TwoCongruence => "two-congruence",
            ProfileKind::LinearVsP => "linear-vs-p",
            ProfileKind::PsdLinearVsP => "psd-vs-p",
            ProfileKind::TwoLinear => "two-linear",
            ProfileKind::LsVsLr => "ls-vs-lr",
        }
    }

    pub fn recipe_kind(self) -> RecipeKind {
        match self {
            ProfileKind::CompletionHermitian | ProfileKind::CompletionPsd => RecipeKind::Completion,
            ProfileKind::CompletionTwo => RecipeKind::CompletionTwo,
            ProfileKind::SkewPair => RecipeKind::SkewPair,
            ProfileKind::TwoCongruence => RecipeKind::TwoCongruence,
            ProfileKind::LinearVsP => RecipeKind::LinearHermitian,
            ProfileKind::PsdLinearVsP => RecipeKind::LinearPsd,
            ProfileKind::TwoLinear => RecipeKind::TwoLinear,
            ProfileKind::LsVsLr => RecipeKind::LsLr,
        }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ProfileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProfileKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown profile kind `{s}`")))
    }
}

fn mismatch(kind: ProfileKind) -> Error {
    Error::InvalidArgument(format!("instance does not fit profile kind `{kind}`"))
}

/// Closed-form profile of `instance` under `kind`.
pub fn profile_of(kind: ProfileKind, instance: &Instance) -> Result<ProfileReport> {
    use Instance as I;
    use ProfileKind as K;
    let cl = Clone::clone;
    match (kind, instance) {
        (K::CompletionHermitian, I::Completion { a, b, .. }) => {
            profile_completion_hermitian(&CompletionSpec::hermitian(cl(a), cl(b))?)
        }
        (K::CompletionPsd, I::Completion { a, b, sign }) => {
            profile_completion_psd(&CompletionSpec::psd(cl(a), cl(b), *sign)?)
        }
        (K::CompletionTwo, I::CompletionTwo { a, b, c }) => {
            profile_completion_two(&CompletionSpec::two(cl(a), cl(b), cl(c))?)
        }
        (K::SkewPair, I::SkewPair { a, b, c }) => profile_skew_pair(a, b, c.as_ref()),
        (K::TwoCongruence, I::TwoCongruence { a1, b1, a2, b2 }) => profile_two_congruence(
            &CongruenceEqSpec::new(cl(a1), cl(b1))?,
            &CongruenceEqSpec::new(cl(a2), cl(b2))?,
        ),
        (K::LinearVsP, I::LinearHermitian { a, b, p }) => {
            profile_linear_vs_p(&LinearEqSpec::new(cl(a), cl(b))?, p)
        }
        (K::PsdLinearVsP, I::LinearPsd { a, b, p }) => {
            profile_psd_linear_vs_p(&LinearEqSpec::new(cl(a), cl(b))?, p)
        }
        (K::TwoLinear, I::TwoLinear { a, b, c, d }) => profile_two_linear(
            &LinearEqSpec::new(cl(a), cl(b))?,
            &LinearEqSpec::new(cl(c), cl(d))?,
        ),
        (K::LsVsLr, I::LsLr { a, b }) => profile_ls_vs_lr(&CongruenceEqSpec::new(cl(a), cl(b))?),
        _ => Err(mismatch(kind)),
    }
}

type Sm = ScaledMatrix;

fn sm(m: &Matrix) -> Sm {
    ScaledMatrix::from_matrix(m)
}

fn scaled_identity(n: usize, num: i64, den: i64) -> Matrix {
    Matrix::identity(n).scale(&GaussianRational::from_ratio(num, den))
}

/// The realized difference `D(parameters)` of one profile kind, with its fixed parts
/// precomputed as scaled integer matrices.
enum Sweep {
    Completion {
        a: Sm,
        b: Sm,
        bs: Sm,
        n: usize,
        psd: Option<Sign>,
    },
    CompletionTwo {
        a: Sm,
        b: Sm,
        bs: Sm,
        c: Sm,
        cs: Sm,
        n: usize,
        k: usize,
    },
    Skew {
        a: Sm,
        b: Sm,
        c: Option<Sm>,
        dir: Matrix,
    },
    TwoCongruence {
        base: Sm,
        f1: Sm,
        f2: Sm,
        n: usize,
    },
    LinearVsP {
        base: Sm,
        f: Sm,
        n: usize,
        psd: bool,
    },
    TwoLinear {
        base: Sm,
        fa: Sm,
        fc: Sm,
        n: usize,
    },
    LsVsLr {
        base: Sm,
        fa: Sm,
        t1: Sm,
        t1s: Matrix,
        n: usize,
    },
}

/// Parameter source for one draw: draw 0 is all zeros, then alternating integer grid
/// entries in `[-2, 2]` and random rationals, with a large push on most draws.
struct Draw {
    s: Sampler,
    zero: bool,
    grid: bool,
}

impl Draw {
    fn new(seed: u64, index: usize, complex: bool) -> Self {
        let mut s = Sampler::new(derive_seed(seed, index as u64), 5).den_bound(3);
        let c = complex && s.coin(0.5);
        s.set_complex(c);
        Self {
            s,
            zero: index == 0,
            grid: index % 2 == 0,
        }
    }

    fn general(&mut self, r: usize, c: usize) -> Matrix {
        if self.zero {
            Matrix::zeros(r, c)
        } else if self.grid {
            self.s.int_matrix(r, c, -2, 2)
        } else {
            self.s.matrix(r, c)
        }
    }

    fn herm(&mut self, n: usize) -> Matrix {
        if self.zero {
            Matrix::zeros(n, n)
        } else if self.grid {
            self.s.int_hermitian(n, -2, 2)
        } else {
            self.s.hermitian(n)
        }
    }

    /// `s·λ` with `s = ±1` and `λ ∈ {1, 10, 100, 1000}`, or zero.
    fn push(&mut self) -> i64 {
        if self.zero || self.s.coin(0.4) {
            return 0;
        }
        let sign = if self.s.coin(0.5) { 1 } else { -1 };
        sign * *self.s.pick(&[1, 10, 100, 1000])
    }

    /// `λI + VV*`, a PSD parameter.
    fn psd(&mut self, n: usize) -> Matrix {
        let v = self.general(n, n);
        let lam = self.push().abs();
        &scaled_identity(n, lam, 1) + &(&v * &v.adjoint())
    }

    fn herm_pushed(&mut self, n: usize) -> Matrix {
        let u = self.herm(n);
        let l = self.push();
        &u + &scaled_identity(n, l, 1)
    }
}

fn plus_adjoint(x: &Sm) -> Sm {
    x.add(&x.adjoint())
}

impl Sweep {
    fn new(kind: ProfileKind, instance: &Instance) -> Result<Self> {
        use Instance as I;
        use ProfileKind as K;
        let cl = Clone::clone;
        Ok(match (kind, instance) {
            (K::CompletionHermitian, I::Completion { a, b, .. }) => Sweep::Completion {
                a: sm(a),
                b: sm(b),
                bs: sm(&b.adjoint()),
                n: b.cols(),
                psd: None,
            },
            (K::CompletionPsd, I::Completion { a, b, sign }) => Sweep::Completion {
                a: sm(a),
                b: sm(b),
                bs: sm(&b.adjoint()),
                n: b.cols(),
                psd: Some(*sign),
            },
            (K::CompletionTwo, I::CompletionTwo { a, b, c }) => Sweep::CompletionTwo {
                a: sm(a),
                b: sm(b),
                bs: sm(&b.adjoint()),
                c: sm(c),
                cs: sm(&c.adjoint()),
                n: b.cols(),
                k: c.cols(),
            },
            (K::SkewPair, I::SkewPair { a, b, c }) => {
                let bp = pinv_matrix(b);
                let dir = match c {
                    Some(c) => &bp * &pinv_matrix(c),
                    None => bp,
                };
                Sweep::Skew {
                    a: sm(a),
                    b: sm(b),
                    c: c.as_ref().map(sm),
                    dir,
                }
            }
            (K::TwoCongruence, I::TwoCongruence { a1, b1, a2, b2 }) => {
                let f1 = CongruenceFamily::new(&CongruenceEqSpec::new(cl(a1), cl(b1))?)?;
                let f2 = CongruenceFamily::new(&CongruenceEqSpec::new(cl(a2), cl(b2))?)?;
                Sweep::TwoCongruence {
                    base: sm(&(&f1.x0 - &f2.x0)),
                    f1: sm(&f1.f),
                    f2: sm(&f2.f),
                    n: a1.cols(),
                }
            }
            (K::LinearVsP, I::LinearHermitian { a, b, p }) => {
                let fam = HermitianFamily::new(&LinearEqSpec::new(cl(a), cl(b))?)?;
                Sweep::LinearVsP {
                    base: sm(&(&fam.x0 - p)),
                    f: sm(&fam.f),
                    n: a.cols(),
                    psd: false,
                }
            }
            (K::PsdLinearVsP, I::LinearPsd { a, b, p }) => {
                let fam = PsdFamily::new(&LinearEqSpec::new(cl(a), cl(b))?)?;
                Sweep::LinearVsP {
                    base: sm(&(&fam.x0 - p)),
                    f: sm(&fam.f),
                    n: a.cols(),
                    psd: true,
                }
            }
            (K::TwoLinear, I::TwoLinear { a, b, c, d }) => {
                let x = HermitianFamily::new(&LinearEqSpec::new(cl(a), cl(b))?)?;
                let y = HermitianFamily::new(&LinearEqSpec::new(cl(c), cl(d))?)?;
                Sweep::TwoLinear {
                    base: sm(&(&x.x0 - &y.x0)),
                    fa: sm(&x.f),
                    fc: sm(&y.f),
                    n: a.cols(),
                }
            }
            (K::LsVsLr, I::LsLr { a, b }) => {
                let spec = CongruenceEqSpec::new(cl(a), cl(b))?;
                let ls = CongruenceFamily::least_squares(&spec);
                let lr = LeastRankFamily::new(&spec);
                Sweep::LsVsLr {
                    base: sm(&(&ls.x0 - &lr.y0)),
                    fa: sm(&ls.f),
                    t1: sm(&lr.t1),
                    t1s: lr.t1.adjoint(),
                    n: a.cols(),
                }
            }
            _ => return Err(mismatch(kind)),
        })
    }

    fn sample(&self, d: &mut Draw) -> Sm {
        match self {
            Sweep::Completion { a, b, bs, n, psd } => {
                let x = match psd {
                    None => d.herm_pushed(*n),
                    Some(_) => d.psd(*n),
                };
                let bxb = b.mul(&sm(&x)).mul(bs);
                match psd {
                    Some(Sign::Plus) => a.add(&bxb),
                    _ => a.sub(&bxb),
                }
            }
            Sweep::CompletionTwo {
                a,
                b,
                bs,
                c,
                cs,
                n,
                k,
            } => {
                let x = d.herm_pushed(*n);
                let y = d.herm_pushed(*k);
                a.sub(&b.mul(&sm(&x)).mul(bs)).sub(&c.mul(&sm(&y)).mul(cs))
            }
            Sweep::Skew { a, b, c, dir } => {
                let (r, k) = dir.shape();
                let l = d.push();
                let x = &d.general(r, k) - &dir.scale(&GaussianRational::from_ratio(l, 2));
                let bx = b.mul(&sm(&x));
                let t = match c {
                    Some(c) => bx.mul(c),
                    None => bx,
                };
                a.sub(&plus_adjoint(&t))
            }
            Sweep::TwoCongruence { base, f1, f2, n } => {
                let l = d.push();
                let u1 = &d.general(*n, *n) + &scaled_identity(*n, l, 2);
                let u2 = &d.general(*n, *n) - &scaled_identity(*n, l, 2);
                base.add(&plus_adjoint(&f1.mul(&sm(&u1))))
                    .sub(&plus_adjoint(&f2.mul(&sm(&u2))))
            }
            Sweep::LinearVsP { base, f, n, psd } => {
                let u = if *psd { d.psd(*n) } else { d.herm_pushed(*n) };
                base.add(&f.mul(&sm(&u)).mul(f))
            }
            Sweep::TwoLinear { base, fa, fc, n } => {
                let l = d.push();
                let u = &d.herm(*n) + &scaled_identity(*n, l, 1);
                let v = &d.herm(*n) - &scaled_identity(*n, l, 1);
                base.add(&fa.mul(&sm(&u)).mul(fa))
                    .sub(&fc.mul(&sm(&v)).mul(fc))
            }
            Sweep::LsVsLr {
                base,
                fa,
                t1,
                t1s,
                n,
            } => {
                let l = d.push();
                let u = &d.general(*n, *n) + &scaled_identity(*n, l, 2);
                let v =
                    &d.general(t1s.rows(), *n) - &t1s.scale(&GaussianRational::from_ratio(l, 2));
                base.add(&plus_adjoint(&fa.mul(&sm(&u))))
                    .sub(&plus_adjoint(&t1.mul(&sm(&v))))
            }
        }
    }
}

/// Observed extremes of rank and inertia over the sampled members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnvelopeReport {
    pub kind: ProfileKind,
    pub closed_form: ExtremalProfile,
    pub observed_min_rank: usize,
    pub observed_max_rank: usize,
    pub observed_min_i_plus: usize,
    pub observed_max_i_plus: usize,
    pub observed_min_i_minus: usize,
    pub observed_max_i_minus: usize,
    pub trials: usize,
    /// Observed maxima equal the closed-form maxima for rank, `i+` and `i-`.
    pub max_attained: bool,
    /// Every observation lies inside the closed-form bounds.
    pub min_consistent: bool,
    /// Observed minima equal the closed-form minima (not required; minima are rare).
    pub min_attained: bool,
}

/// Perturbation applied to the closed form before comparison, for negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum Fault {
    #[default]
    None,
    /// Lowers the maximal rank by one (raises the minimal rank when the maximum is 0).
    ShiftRank,
}

impl Fault {
    fn apply(self, mut p: ExtremalProfile) -> ExtremalProfile {
        if self == Fault::ShiftRank {
            if p.max_rank > 0 {
                p.max_rank -= 1;
            } else {
                p.min_rank += 1;
                p.max_rank += 1;
            }
        }
        p
    }
}

/// Samples `trials` members of the family behind `kind` and compares with the profile.
pub fn envelope_for_instance(
    kind: ProfileKind,
    instance: &Instance,
    trials: usize,
    seed: u64,
    fault: Fault,
) -> Result<EnvelopeReport> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    let closed = fault.apply(profile_of(kind, instance)?.profile);
    let sweep = Sweep::new(kind, instance)?;
    let complex = !instance.is_real();
    let (mut lo, mut hi) = ([usize::MAX; 3], [0usize; 3]);
    for t in 0..trials {
        let mut d = Draw::new(seed, t, complex);
        let (p, q) = sweep.sample(&mut d).inertia_pm();
        for (j, v) in [p + q, p, q].into_iter().enumerate() {
            lo[j] = lo[j].min(v);
            hi[j] = hi[j].max(v);
        }
    }
    let c = &closed;
    let bounds = [
        (c.min_rank, c.max_rank),
        (c.min_i_plus, c.max_i_plus),
        (c.min_i_minus, c.max_i_minus),
    ];
    Ok(EnvelopeReport {
        kind,
        closed_form: closed,
        observed_min_rank: lo[0],
        observed_max_rank: hi[0],
        observed_min_i_plus: lo[1],
        observed_max_i_plus: hi[1],
        observed_min_i_minus: lo[2],
        observed_max_i_minus: hi[2],
        trials,
        max_attained: (0..3).all(|j| hi[j] == bounds[j].1),
        min_consistent: (0..3).all(|j| bounds[j].0 <= lo[j] && hi[j] <= bounds[j].1),
        min_attained: (0..3).all(|j| lo[j] == bounds[j].0),
    })
}

/// Generates the instance for `recipe` and runs [`envelope_for_instance`].
pub fn monte_carlo_envelope(
    recipe: &InstanceRecipe,
    kind: ProfileKind,
    trials: usize,
) -> Result<EnvelopeReport> {
    if recipe.kind != kind.recipe_kind() {
        return Err(mismatch(kind));
    }
    envelope_for_instance(
        kind,
        &generate_instance(recipe),
        trials,
        recipe.seed,
        Fault::None,
    )
}

/// Settings shared by the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteConfig {
    pub seed: u64,
    /// Instances per kind (or trials per identity).
    pub trials: usize,
    /// Parameter draws per envelope instance.
    pub draws: usize,
    pub max_dim: usize,
    pub bound: i64,
    pub fault: Fault,
}

impl SuiteConfig {
    pub fn new(seed: u64, trials: usize, max_dim: usize) -> Self {
        Self {
            seed,
            trials,
            draws: 500,
            max_dim,
            bound: 5,
            fault: Fault::None,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.trials == 0 || self.draws == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if self.max_dim == 0 {
            return Err(Error::InvalidArgument(
                "max dimension must be at least 1".into(),
            ));
        }
        if self.bound < 1 {
            return Err(Error::InvalidArgument("bound must be at least 1".into()));
        }
        Ok(())
    }
}

/// Replayable record of a failed envelope.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Counterexample {
    pub kind: ProfileKind,
    pub recipe: InstanceRecipe,
    pub instance: Instance,
    pub fault: Fault,
    pub report: EnvelopeReport,
}

impl Counterexample {
    /// Recomputes the envelope from the stored instance.
    pub fn replay(&self) -> Result<EnvelopeReport> {
        envelope_for_instance(
            self.kind,
            &self.instance,
            self.report.trials,
            self.recipe.seed,
            self.fault,
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct KindSummary {
    pub kind: ProfileKind,
    pub instances: usize,
    pub contained: usize,
    pub max_attained: usize,
    pub min_attained: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EnvelopeSuiteReport {
    pub summaries: Vec<KindSummary>,
    pub counterexample: Option<Counterexample>,
}

impl EnvelopeSuiteReport {
    pub fn violations(&self) -> usize {
        self.summaries
            .iter()
            .map(|s| s.instances - s.contained)
            .sum()
    }
}

fn kind_seed(seed: u64, kind: ProfileKind) -> u64 {
    derive_seed(seed, 0x1000 + kind as u64)
}

/// Envelopes for `cfg.trials` instances of each kind in `kinds`.
pub fn envelope_suite(cfg: &SuiteConfig, kinds: &[ProfileKind]) -> Result<EnvelopeSuiteReport> {
    cfg.validate()?;
    let jobs: Vec<(ProfileKind, usize)> = kinds
        .iter()
        .flat_map(|&k| (0..cfg.trials).map(move |i| (k, i)))
        .collect();
    let results: Vec<(ProfileKind, InstanceRecipe, Instance, EnvelopeReport)> = jobs
        .par_iter()
        .map(|&(kind, i)| {
            let seed = derive_seed(kind_seed(cfg.seed, kind), i as u64);
            let recipe = InstanceRecipe::random(seed, kind.recipe_kind(), cfg.max_dim, cfg.bound);
            let instance = generate_instance(&recipe);
            let report = envelope_for_instance(kind, &instance, cfg.draws, seed, cfg.fault)?;
            Ok((kind, recipe, instance, report))
        })
        .collect::<Result<_>>()?;
    let mut summaries = Vec::new();
    let mut counterexample = None;
    for &kind in kinds {
        let mine: Vec<_> = results.iter().filter(|r| r.0 == kind).collect();
        if counterexample.is_none() {
            if let Some((_, recipe, instance, report)) = mine.iter().find(|r| !r.3.min_consistent) {
                counterexample = Some(Counterexample {
                    kind,
                    recipe: *recipe,
                    instance: instance.clone(),
                    fault: cfg.fault,
                    report: *report,
                });
            }
        }
        summaries.push(KindSummary {
            kind,
            instances: mine.len(),
            contained: mine.iter().filter(|r| r.3.min_consistent).count(),
            max_attained: mine.iter().filter(|r| r.3.max_attained).count(),
            min_attained: mine.iter().filter(|r| r.3.min_attained).count(),
        });
    }
    Ok(EnvelopeSuiteReport {
        summaries,
        counterexample,
    })
}

fn dims(s: &mut Sampler, max_dim: usize, count: usize) -> Vec<usize> {
    (0..count)
        .map(|_| s.integer(1, max_dim.max(1) as i64) as usize)
        .collect()
}

fn identity_trial(seed: u64, max_dim: usize) -> Result<Vec<IdentityReport>> {
    let mut s = Sampler::new(seed, 5).den_bound(2);
    let complex = s.coin(0.3);
    s.set_complex(complex);
    let d = dims(&mut s, max_dim, 5);
    let (m, n, k, l, j) = (d[0], d[1], d[2], d[3], d[4]);
    let mut out = Vec::new();

    let a = s.any_rank(m, n);
    let b = s.any_rank(m, k);
    let c = s.any_rank(l, n);
    out.extend(rank_expansion_report(&a, &b, &c)?);
    let p = s.any_rank(l, j);
    let q = s.any_rank(j, k);
    out.push(rank_row_projector_report(&a, &b, &c, &p)?);
    out.push(rank_col_projector_report(&a, &b, &c, &q)?);
    out.push(rank_two_projector_report(&a, &b, &c, &p, &q)?);

    let ah = herm_any(&mut s, m);
    let bh = s.any_rank(m, k);
    let dh = herm_any(&mut s, k);
    out.extend(inertia_expansion_report(&ah, &bh, &dh)?);
    // A ≽ 0 with R(B) ⊆ R(A) exercises both conditional forms
    let apsd = psd_any(&mut s, m);
    let bin = &apsd * &s.any_rank(m, k);
    out.extend(inertia_expansion_report(&apsd, &bin, &dh)?);
    let p2 = s.any_rank(j, k);
    out.push(inertia_col_projector_report(&ah, &bh, &p2)?);
    let q2 = s.any_rank(m, j);
    out.push(inertia_row_projector_report(&ah, &bh, &dh, &q2)?);

    out.extend(inertia_laws(&mut s, &ah)?);
    out.push(block_diagonal_report(&ah, &dh)?);
    out.push(hyperbolic_report(&a));
    Ok(out)
}

fn inertia_laws(s: &mut Sampler, a: &Matrix) -> Result<Vec<IdentityReport>> {
    let p = s.nonsingular(a.rows());
    let (num, den) = *s.pick(&[(1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)]);
    Ok(vec![
        sylvester_report(a, &p)?,
        scaling_report(a, &ratio(num, den))?,
    ])
}

/// Every block identity on `trials` random instances with dimensions up to `max_dim`.
pub fn identity_suite(seed: u64, trials: usize, max_dim: usize) -> Result<Vec<IdentityReport>> {
    SuiteConfig::new(seed, trials, max_dim).validate()?;
    let per: Vec<Vec<IdentityReport>> = (0..trials)
        .into_par_iter()
        .map(|t| identity_trial(derive_seed(seed, t as u64), max_dim))
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Congruence invariance and the scaling law on random Hermitian matrices.
pub fn inertia_law_suite(seed: u64, trials: usize, max_dim: usize) -> Result<Vec<IdentityReport>> {
    SuiteConfig::new(seed, trials, max_dim).validate()?;
    let per: Vec<Vec<IdentityReport>> = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut s = Sampler::new(derive_seed(seed, t as u64), 5);
            let complex = s.coin(0.3);
            s.set_complex(complex);
            let n = s.integer(1, max_dim.max(1) as i64) as usize;
            let a = herm_any(&mut s, n);
            inertia_laws(&mut s, &a)
        })
        .collect::<Result<_>>()?;
    Ok(per.into_iter().flatten().collect())
}

/// Per-name pass counts of a list of identity reports, in first-seen order.
pub fn tally(reports: &[IdentityReport]) -> Vec<(String, usize, usize)> {
    let mut out: Vec<(String, usize, usize)> = Vec::new();
    for r in reports {
        let idx = match out.iter().position(|e| e.0 == r.name) {
            Some(i) => i,
            None => {
                out.push((r.name.clone(), 0, 0));
                out.len() - 1
            }
        };
        out[idx].1 += 1;
        out[idx].2 += r.holds as usize;
    }
    out
}

/// Hermitian solution of the transformed equation `TAXA*T* = TBT*` for parameter `u`.
pub fn transformed_member(spec: &CongruenceEqSpec, t: &Matrix, u: &Matrix) -> Result<Matrix> {
    let ta = t.checked_mul(spec.a())?;
    let tbt = &(t * spec.b()) * &t.adjoint();
    CongruenceFamily::new(&CongruenceEqSpec::new(ta, tbt)?)?.member(u)
}

/// `AXA* = B`.
pub fn solves(spec: &CongruenceEqSpec, x: &Matrix) -> bool {
    x.is_hermitian() && &(spec.a() * x) * &spec.a().adjoint() == *spec.b()
}

fn congruence_instance(seed: u64, max_dim: usize) -> CongruenceEqSpec {
    let recipe = InstanceRecipe::random(seed, RecipeKind::Congruence, max_dim, 5);
    match generate_instance(&recipe) {
        Instance::Congruence { a, b } => CongruenceEqSpec::new(a, b).expect("constructed"),
        _ => unreachable!(),
    }
}

/// Outcome of sampling the transformed solution set of one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TransformedTrial {
    pub rank_preserved: bool,
    pub draws: usize,
    /// Members that also solve the original equation.
    pub solving: usize,
    /// Index of the first member that does not.
    pub first_violation: Option<usize>,
}

/// Draws a solvable `AXA* = B` and a transform `T` that keeps (`preserve`) or drops the
/// rank of `A`, then samples up to `draws` members of the transformed set, stopping at
/// the first member that fails the original equation.
pub fn transformed_trial(
    seed: u64,
    preserve: bool,
    draws: usize,
    max_dim: usize,
) -> Result<TransformedTrial> {
    let mut s = Sampler::new(derive_seed(seed, 1), 5).den_bound(1);
    let mut spec = congruence_instance(seed, max_dim);
    let m = spec.m();
    if !preserve && rank(spec.a()) == 0 {
        // a rank drop needs A ≠ 0
        let a = loop {
            let a = s.low_rank(m, spec.n(), 1);
            if !a.is_zero() {
                break a;
            }
        };
        let x0 = herm_any(&mut s, spec.n());
        let b = &(&a * &x0) * &a.adjoint();
        spec = CongruenceEqSpec::new(a, b)?;
    }
    let ra = rank(spec.a());
    let t = loop {
        let p = s.integer(1, max_dim.max(1) as i64) as usize;
        let t = if preserve {
            // [K; W] with K nonsingular keeps the column space of A*
            if s.coin(0.5) {
                Matrix::vstack(&[&s.nonsingular(m), &s.any_rank(p.saturating_sub(1), m)])?
            } else {
                s.any_rank(p, m)
            }
        } else {
            let r = s.integer(0, ra as i64 - 1) as usize;
            s.low_rank(p, m, r)
        };
        let rta = rank(&(&t * spec.a()));
        if (rta == ra) == preserve {
            break t;
        }
    };
    let n = spec.n();
    let mut solving = 0;
    for i in 0..draws {
        let mut d = Draw::new(derive_seed(seed, 2), i, !spec.a().is_real());
        let u = d.general(n, n);
        if solves(&spec, &transformed_member(&spec, &t, &u)?) {
            solving += 1;
        } else {
            return Ok(TransformedTrial {
                rank_preserved: preserve,
                draws: i + 1,
                solving,
                first_violation: Some(i),
            });
        }
    }
    Ok(TransformedTrial {
        rank_preserved: preserve,
        draws,
        solving,
        first_violation: None,
    })
}

/// Draws `T1`, `T2` with `r(T1A) = r(T2A) = r(A)` and checks `draws` averages
/// `(X1 + X2)/2` of transformed solutions; returns how many solve `AXA* = B`.
pub fn average_trial(seed: u64, draws: usize, max_dim: usize) -> Result<usize> {
    let mut s = Sampler::new(derive_seed(seed, 3), 5).den_bound(1);
    let spec = congruence_instance(seed, max_dim);
    let (m, n) = (spec.m(), spec.n());
    let ra = rank(spec.a());
    let keep = |s: &mut Sampler| loop {
        let p = s.integer(1, max_dim.max(1) as i64) as usize;
        let t = s.any_rank(p, m);
        if rank(&(&t * spec.a())) == ra {
            break t;
        }
    };
    let t1 = keep(&mut s);
    let t2 = keep(&mut s);
    let half = GaussianRational::from_ratio(1, 2);
    let mut ok = 0;
    for i in 0..draws {
        let mut d = Draw::new(derive_seed(seed, 4), i, !spec.a().is_real());
        let x1 = transformed_member(&spec, &t1, &d.general(n, n))?;
        let x2 = transformed_member(&spec, &t2, &d.general(n, n))?;
        ok += solves(&spec, &(&x1 + &x2).scale(&half)) as usize;
    }
    Ok(ok)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpecialCheck {
    pub name: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpecialCaseReport {
    pub checks: Vec<SpecialCheck>,
}

impl SpecialCaseReport {
    pub fn failures(&self) -> Vec<&SpecialCheck> {
        self.checks.iter().filter(|c| !c.holds).collect()
    }
}

fn check(out: &mut Vec<SpecialCheck>, name: &str, holds: bool) {
    out.push(SpecialCheck {
        name: name.to_string(),
        holds,
    });
}

fn special_trial(seed: u64, max_dim: usize) -> Result<Vec<SpecialCheck>> {
    let mut out = Vec::new();
    let mut s = Sampler::new(derive_seed(seed, 5), 5).den_bound(1);
    let recipe = |kind| InstanceRecipe::random(derive_seed(seed, kind as u64), kind, max_dim, 5);
    let exists_equal = OrderingQuery::exists(Relation::Equal);

    if let Instance::LinearHermitian { a, b, .. } =
        generate_instance(&recipe(RecipeKind::LinearHermitian))
    {
        let spec = LinearEqSpec::new(a, b)?;
        let n = spec.n();
        let p = hermitian_solution(&spec, &s.hermitian(n))?;
        check(
            &mut out,
            "P in S: min r(X - P) = 0",
            profile_linear_vs_p(&spec, &p)?.profile.min_rank == 0,
        );
    }
    if let Instance::LinearPsd { a, b, .. } = generate_instance(&recipe(RecipeKind::LinearPsd)) {
        let spec = LinearEqSpec::new(a, b)?;
        let n = spec.n();
        let p = psd_solution(&spec, &s.matrix(n, n))?;
        check(
            &mut out,
            "P in PSD S: min r(X - P) = 0",
            profile_psd_linear_vs_p(&spec, &p)?.profile.min_rank == 0,
        );
    }
    let r = recipe(RecipeKind::TwoLinear);
    {
        let mut t = Sampler::new(r.seed, 5).den_bound(1);
        let a = t.any_rank(r.m, r.n);
        let m2 = t.integer(1, max_dim as i64) as usize;
        let c = t.any_rank(m2, r.n);
        let x0 = herm_any(&mut t, r.n);
        let (s1, s2) = (
            LinearEqSpec::new(a.clone(), &a * &x0)?,
            LinearEqSpec::new(c.clone(), &c * &x0)?,
        );
        check(
            &mut out,
            "shared solution: min r(X - Y) = 0",
            profile_two_linear(&s1, &s2)?.profile.min_rank == 0,
        );
        let v = decide_two_linear(&s1, &s2, exists_equal)?;
        check(
            &mut out,
            "shared solution: common solution verified",
            v.holds
                && v.evidence
                    .iter()
                    .any(|e| e.label == "common solution verified"),
        );
    }
    {
        let mut t = Sampler::new(derive_seed(seed, 6), 5).den_bound(1);
        let n = t.integer(1, max_dim as i64) as usize;
        let (m1, m2) = (
            t.integer(1, max_dim as i64) as usize,
            t.integer(1, max_dim as i64) as usize,
        );
        let a1 = t.any_rank(m1, n);
        let a2 = t.any_rank(m2, n);
        let x0 = herm_any(&mut t, n);
        let s1 = CongruenceEqSpec::new(a1.clone(), &(&a1 * &x0) * &a1.adjoint())?;
        let s2 = CongruenceEqSpec::new(a2.clone(), &(&a2 * &x0) * &a2.adjoint())?;
        check(
            &mut out,
            "shared congruence solution: min r(X1 - X2) = 0",
            profile_two_congruence(&s1, &s2)?.profile.min_rank == 0,
        );
    }
    {
        let spec = congruence_instance(derive_seed(seed, 7), max_dim);
        let m = spec.m();
        let k = t_rows(&mut s, max_dim);
        let t = Matrix::vstack(&[&s.nonsingular(m), &s.any_rank(k, m)])?;
        check(
            &mut out,
            "r(TA) = r(A): sets equal",
            decide_transformed_set_equality(&spec, &t)?.holds,
        );
        let n = spec.n();
        let all = (0..5).all(|_| {
            let u = s.matrix(n, n);
            transformed_member(&spec, &t, &u)
                .map(|x| solves(&spec, &x))
                .unwrap_or(false)
        });
        check(&mut out, "r(TA) = r(A): transformed members solve", all);
    }
    {
        let mut t = Sampler::new(derive_seed(seed, 8), 5).den_bound(1);
        let n = t.integer(1, max_dim as i64) as usize;
        let m1 = t.integer(1, max_dim as i64) as usize;
        let a1 = t.any_rank(m1, n);
        let a2 = &t.nonsingular(m1) * &a1;
        let a = Matrix::vstack(&[&a1, &a2])?;
        let x0 = herm_any(&mut t, n);
        let spec = CongruenceEqSpec::new(a.clone(), &(&a * &x0) * &a.adjoint())?;
        check(
            &mut out,
            "row partition with R(A1*) = R(A2*): sets equal",
            decide_row_partition_average(&spec, m1)?.holds,
        );
        let (t1, t2) = (
            Matrix::hstack(&[&Matrix::identity(m1), &Matrix::zeros(m1, m1)])?,
            Matrix::hstack(&[&Matrix::zeros(m1, m1), &Matrix::identity(m1)])?,
        );
        let half = GaussianRational::from_ratio(1, 2);
        let all = (0..5).all(|_| {
            let x1 = transformed_member(&spec, &t1, &t.matrix(n, n));
            let x2 = transformed_member(&spec, &t2, &t.matrix(n, n));
            match (x1, x2) {
                (Ok(x1), Ok(x2)) => solves(&spec, &(&x1 + &x2).scale(&half)),
                _ => false,
            }
        });
        check(
            &mut out,
            "row partition with R(A1*) = R(A2*): averages solve",
            all,
        );
    }
    {
        let mut t = Sampler::new(derive_seed(seed, 9), 5).den_bound(1);
        let m = t.integer(1, max_dim as i64) as usize;
        let n = t.integer(1, max_dim as i64) as usize;
        let a = t.any_rank(m, n);
        let ea = e_proj(&a);
        let b =
            &(&(&a * &psd_any(&mut t, n)) * &a.adjoint()) + &(&(&ea * &psd_any(&mut t, m)) * &ea);
        let spec = CongruenceEqSpec::new(a, b)?;
        check(
            &mut out,
            "B ≽ 0, R(BA) ⊆ R(A): min r(X - Y) = 0",
            profile_ls_vs_lr(&spec)?.profile.min_rank == 0,
        );
        check(
            &mut out,
            "B ≽ 0, R(BA) ⊆ R(A): exists equal",
            decide_ls_vs_lr(&spec, exists_equal)?.holds,
        );
    }
    Ok(out)
}

fn t_rows(s: &mut Sampler, max_dim: usize) -> usize {
    s.integer(0, max_dim as i64 - 1).max(0) as usize
}

/// Instances whose minimum is forced, with the closed forms and explicit witnesses checked.
pub fn special_case_suite(seed: u64, trials: usize, max_dim: usize) -> Result<SpecialCaseReport> {
    SuiteConfig::new(seed, trials, max_dim).validate()?;
    let per: Vec<Vec<SpecialCheck>> = (0..trials)
        .into_par_iter()
        .map(|t| special_trial(derive_seed(seed, t as u64), max_dim))
        .collect::<Result<_>>()?;
    Ok(SpecialCaseReport {
        checks: per.into_iter().flatten().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solutions::{check_congruence, check_linear_hermitian, check_linear_psd};

    fn recipe(seed: u64, kind: RecipeKind) -> InstanceRecipe {
        InstanceRecipe::random(seed, kind, 4, 5)
    }

    #[test]
    fn generated_instances_are_solvable() {
        for seed in 0..40 {
            match generate_instance(&recipe(seed, RecipeKind::LinearHermitian)) {
                Instance::LinearHermitian { a, b, p } => {
                    assert!(check_linear_hermitian(&LinearEqSpec::new(a, b).unwrap()).solvable);
                    assert!(p.is_hermitian());
                }
                _ => unreachable!(),
            }
            match generate_instance(&recipe(seed, RecipeKind::LinearPsd)) {
                Instance::LinearPsd { a, b, .. } => {
                    assert!(check_linear_psd(&LinearEqSpec::new(a, b).unwrap()).solvable)
                }
                _ => unreachable!(),
            }
            match generate_instance(&recipe(seed, RecipeKind::Congruence)) {
                Instance::Congruence { a, b } => {
                    assert!(check_congruence(&CongruenceEqSpec::new(a, b).unwrap()).solvable)
                }
                _ => unreachable!(),
            }
        }
    }

    #[test]
    fn generation_is_deterministic() {
        let r = recipe(17, RecipeKind::TwoCongruence);
        assert_eq!(generate_instance(&r), generate_instance(&r));
        let e1 =
            monte_carlo_envelope(&recipe(3, RecipeKind::LsLr), ProfileKind::LsVsLr, 40).unwrap();
        let e2 =
            monte_carlo_envelope(&recipe(3, RecipeKind::LsLr), ProfileKind::LsVsLr, 40).unwrap();
        assert_eq!(e1, e2);
    }

    #[test]
    fn small_linear_vs_p_envelope() {
        let inst = Instance::LinearHermitian {
            a: Matrix::from_ints(&[[1, 0]]),
            b: Matrix::from_ints(&[[1, 0]]),
            p: Matrix::zeros(2, 2),
        };
        let e = envelope_for_instance(ProfileKind::LinearVsP, &inst, 100, 0, Fault::None).unwrap();
        assert_eq!((e.observed_min_rank, e.observed_max_rank), (1, 2));
        assert_eq!((e.observed_min_i_plus, e.observed_max_i_plus), (1, 2));
        assert_eq!((e.observed_min_i_minus, e.observed_max_i_minus), (0, 1));
        assert!(e.max_attained && e.min_consistent);
        let one = envelope_for_instance(ProfileKind::LinearVsP, &inst, 1, 0, Fault::None).unwrap();
        assert!(one.min_consistent);
    }

    #[test]
    fn ls_vs_lr_identity_envelope_is_zero() {
        let mut s = Sampler::new(4, 3);
        let inst = Instance::LsLr {
            a: Matrix::identity(3),
            b: s.psd(3),
        };
        let e = envelope_for_instance(ProfileKind::LsVsLr, &inst, 30, 1, Fault::None).unwrap();
        assert_eq!(e.closed_form, ExtremalProfile::constant(0, 0, 3));
        assert_eq!(e.observed_max_rank, 0);
    }

    #[test]
    fn every_kind_is_contained_on_a_few_instances() {
        let cfg = SuiteConfig {
            draws: 60,
            ..SuiteConfig::new(9, 4, 3)
        };
        let rep = envelope_suite(&cfg, &ProfileKind::ALL).unwrap();
        assert_eq!(rep.violations(), 0, "{:?}", rep.counterexample);
    }

    #[test]
    fn injected_fault_is_caught_and_replays() {
        let cfg = SuiteConfig {
            draws: 60,
            fault: Fault::ShiftRank,
            ..SuiteConfig::new(2, 6, 3)
        };
        let rep = envelope_suite(&cfg, &[ProfileKind::LinearVsP]).unwrap();
        let cx = rep.counterexample.expect("fault detected");
        assert_eq!(cx.replay().unwrap(), cx.report);
        let json = serde_json::to_string(&cx).unwrap();
        let back: Counterexample = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cx);
    }

    #[test]
    fn suites_pass_on_small_runs() {
        let ids = identity_suite(1, 5, 3).unwrap();
        assert!(
            ids.iter().all(|r| r.holds),
            "{:?}",
            ids.iter().find(|r| !r.holds)
        );
        assert!(identity_suite(1, 0, 3).is_err());
        assert!(identity_suite(1, 3, 1).unwrap().iter().all(|r| r.holds));
        let sc = special_case_suite(1, 5, 3).unwrap();
        assert!(sc.failures().is_empty(), "{:?}", sc.failures());
    }

    #[test]
    fn transformed_and_average_trials() {
        let t = transformed_trial(5, true, 10, 4).unwrap();
        assert_eq!(t.solving, 10);
        let t = transformed_trial(5, false, 50, 4).unwrap();
        assert!(t.first_violation.is_some());
        assert_eq!(average_trial(5, 5, 4).unwrap(), 5);
    }
}
