//! Fraction-free arithmetic on Gaussian-integer matrices.
//!
//! Kernels run first on `i128` with overflow checks and fall back to `BigInt`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::scalar::{GaussianRational, Rational};

/// Integer operations for fraction-free reduction; `None` signals overflow.
pub(crate) trait Int: Clone + Sized {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn add(&self, o: &Self) -> Option<Self>;
    fn sub(&self, o: &Self) -> Option<Self>;
    fn mul(&self, o: &Self) -> Option<Self>;
    fn neg(&self) -> Option<Self>;
    fn gcd_with(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn unit() -> Self;
}

impl Int for i128 {
    fn nil() -> Self {
        0
    }
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn add(&self, o: &Self) -> Option<Self> {
        self.checked_add(*o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        self.checked_sub(*o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        self.checked_mul(*o)
    }
    fn neg(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn gcd_with(&self, o: &Self) -> Self {
        gcd(*self, *o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_unit(&self) -> bool {
        *self == 1
    }
    fn unit() -> Self {
        1
    }
}

impl Int for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn neg(&self) -> Option<Self> {
        Some(-self)
    }
    fn gcd_with(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn is_unit(&self) -> bool {
        One::is_one(self)
    }
    fn unit() -> Self {
        One::one()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct C<T> {
    pub(crate) re: T,
    pub(crate) im: T,
}

impl<T: Int> C<T> {
    fn is_zero(&self) -> bool {
        self.re.is_nil() && self.im.is_nil()
    }

    fn mul(&self, o: &Self) -> Option<Self> {
        if self.im.is_nil() && o.im.is_nil() {
            return Some(C {
                re: self.re.mul(&o.re)?,
                im: T::nil(),
            });
        }
        Some(C {
            re: self.re.mul(&o.re)?.sub(&self.im.mul(&o.im)?)?,
            im: self.re.mul(&o.im)?.add(&self.im.mul(&o.re)?)?,
        })
    }

    fn scale(&self, k: &T) -> Option<Self> {
        Some(C {
            re: self.re.mul(k)?,
            im: self.im.mul(k)?,
        })
    }

    fn sub(&self, o: &Self) -> Option<Self> {
        Some(C {
            re: self.re.sub(&o.re)?,
            im: self.im.sub(&o.im)?,
        })
    }

    fn norm(&self) -> Option<T> {
        self.re.mul(&self.re)?.add(&self.im.mul(&self.im)?)
    }

    /// Exact division; the caller guarantees divisibility.
    fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.im.is_nil() {
            return Some(C {
                re: self.re.div_exact(&d.re),
                im: self.im.div_exact(&d.re),
            });
        }
        let n = d.norm()?;
        let p = self.mul(&d.conj()?)?;
        Some(C {
            re: p.re.div_exact(&n),
            im: p.im.div_exact(&n),
        })
    }

    fn conj(&self) -> Option<Self> {
        Some(C {
            re: self.re.clone(),
            im: self.im.neg()?,
        })
    }
}

/// Returns `(i+, i-)` of the integer Hermitian matrix `w`, or `None` on overflow.
pub(crate) fn congruence_reduce<T: Int>(mut w: Vec<Vec<C<T>>>) -> Option<(usize, usize)> {
    let (mut plus, mut minus) = (0usize, 0usize);
    // the active block equals a positive multiple of the true Schur complement,
    // negated when `flipped` is set
    let mut flipped = false;
    loop {
        let k = w.len();
        if k == 0 {
            break;
        }
        if let Some(p) = (0..k).find(|&i| !w[i][i].is_zero()) {
            let d = w[p][p].re.clone();
            if d.is_neg() != flipped {
                minus += 1;
            } else {
                plus += 1;
            }
            if d.is_neg() {
                flipped = !flipped;
            }
            let mut next = Vec::with_capacity(k - 1);
            for i in (0..k).filter(|&i| i != p) {
                let mut row = Vec::with_capacity(k - 1);
                for j in (0..k).filter(|&j| j != p) {
                    let mut v = w[i][j].scale(&d)?;
                    if !w[i][p].is_zero() && !w[p][j].is_zero() {
                        v = v.sub(&w[i][p].mul(&w[p][j])?)?;
                    }
                    row.push(v);
                }
                next.push(row);
            }
            w = next;
        } else {
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
            let a = w[i][j].clone();
            let abar = a.conj()?;
            let norm = a.norm()?;
            let mut next = Vec::with_capacity(k - 2);
            for r in (0..k).filter(|&r| r != i && r != j) {
                let mut row = Vec::with_capacity(k - 2);
                for s in (0..k).filter(|&s| s != i && s != j) {
                    let mut v = w[r][s].scale(&norm)?;
                    if !w[r][i].is_zero() && !w[j][s].is_zero() {
                        v = v.sub(&w[r][i].mul(&w[j][s])?.mul(&a)?)?;
                    }
                    if !w[r][j].is_zero() && !w[i][s].is_zero() {
                        v = v.sub(&w[r][j].mul(&w[i][s])?.mul(&abar)?)?;
                    }
                    row.push(v);
                }
                next.push(row);
            }
            w = next;
        }
        reduce_content(&mut w);
    }
    Some((plus, minus))
}

/// Divides every entry by the positive gcd of all parts.
fn reduce_content<T: Int>(w: &mut [Vec<C<T>>]) {
    let mut g = T::nil();
    for z in w.iter().flatten() {
        g = g.gcd_with(&z.re).gcd_with(&z.im);
        if g.is_unit() {
            return;
        }
    }
    if g.is_nil() {
        return;
    }
    for z in w.iter_mut().flatten() {
        z.re = z.re.div_exact(&g);
        z.im = z.im.div_exact(&g);
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    // 2^127 is not representable; skipping that reduction is harmless
    i128::try_from(a).unwrap_or(1)
}

/// Scales every row by the lcm of its denominators, giving Gaussian integers.
pub(crate) fn integerize_rows(a: &Matrix) -> Vec<Vec<C<BigInt>>> {
    (0..a.rows())
        .map(|i| {
            let row = a.row(i);
            let mut l = BigInt::one();
            for z in row {
                l = l.lcm(z.re().denom());
                l = l.lcm(z.im().denom());
            }
            row.iter()
                .map(|z| C {
                    re: z.re().numer() * (&l / z.re().denom()),
                    im: z.im().numer() * (&l / z.im().denom()),
                })
                .collect()
        })
        .collect()
}

/// Multiplies the whole matrix by the (positive) lcm of its denominators.
pub(crate) fn integerize_all(a: &Matrix) -> Vec<Vec<C<BigInt>>> {
    let mut l = BigInt::one();
    for z in a.entries() {
        l = l.lcm(z.re().denom());
        l = l.lcm(z.im().denom());
    }
    (0..a.rows())
        .map(|i| {
            a.row(i)
                .iter()
                .map(|z| C {
                    re: z.re().numer() * (&l / z.re().denom()),
                    im: z.im().numer() * (&l / z.im().denom()),
                })
                .collect()
        })
        .collect()
}

pub(crate) fn to_small(m: &[Vec<C<BigInt>>]) -> Option<Vec<Vec<C<i128>>>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|z| {
                    Some(C {
                        re: i128::try_from(&z.re).ok()?,
                        im: i128::try_from(&z.im).ok()?,
                    })
                })
                .collect()
        })
        .collect()
}

/// Rank profile of an integer matrix: rank plus the original indices of a set of
/// independent rows and of the pivot columns.
pub(crate) struct Echelon {
    pub(crate) rank: usize,
    pub(crate) pivot_rows: Vec<usize>,
    pub(crate) pivot_cols: Vec<usize>,
}

/// Bareiss elimination; the pivot in each column is the entry of smallest norm.
pub(crate) fn bareiss<T: Int + PartialOrd>(mut m: Vec<Vec<C<T>>>, cols: usize) -> Option<Echelon> {
    let rows = m.len();
    let mut perm: Vec<usize> = (0..rows).collect();
    let mut prev = C {
        re: T::unit(),
        im: T::nil(),
    };
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut best: Option<(usize, T)> = None;
        for (i, row) in m.iter().enumerate().skip(r) {
            if !row[c].is_zero() {
                let n = row[c].norm()?;
                if best.as_ref().map_or(true, |(_, bn)| n < *bn) {
                    best = Some((i, n));
                }
            }
        }
        let Some((p, _)) = best else { continue };
        m.swap(r, p);
        perm.swap(r, p);
        let (top, bottom) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in bottom.iter_mut() {
            let lead = row[c].clone();
            for j in c + 1..cols {
                let t = piv.mul(&row[j])?.sub(&lead.mul(&pivot_row[j])?)?;
                row[j] = t.div_exact(&prev)?;
            }
            row[c] = C {
                re: T::nil(),
                im: T::nil(),
            };
        }
        prev = piv;
        pivot_cols.push(c);
        r += 1;
    }
    Some(Echelon {
        rank: r,
        pivot_rows: perm[..r].to_vec(),
        pivot_cols,
    })
}

pub(crate) fn echelon_of(m: Vec<Vec<C<BigInt>>>, cols: usize) -> Echelon {
    if m.is_empty() || cols == 0 {
        return Echelon {
            rank: 0,
            pivot_rows: vec![],
            pivot_cols: vec![],
        };
    }
    to_small(&m)
        .and_then(|s| bareiss(s, cols))
        .unwrap_or_else(|| bareiss(m, cols).expect("BigInt arithmetic cannot overflow"))
}

pub(crate) fn inertia_of(m: Vec<Vec<C<BigInt>>>) -> (usize, usize) {
    to_small(&m)
        .and_then(congruence_reduce)
        .unwrap_or_else(|| congruence_reduce(m).expect("BigInt arithmetic cannot overflow"))
}

/// Fraction-free Gauss-Jordan on `[K | B]` for nonsingular `K` of order `n`.
///
/// Every division is exact. On return the left block is `d I` with `d = ±det K`, and
/// the right block is `d K⁻¹ B`. Returns `(d, d K⁻¹ B)`; `None` on overflow or when
/// `K` is singular.
fn ff_solve<T: Int + PartialOrd>(
    mut w: Vec<Vec<C<T>>>,
    n: usize,
) -> Option<(C<T>, Vec<Vec<C<T>>>)> {
    let width = w.first().map_or(0, |r| r.len());
    let mut prev = C {
        re: T::unit(),
        im: T::nil(),
    };
    for k in 0..n {
        let p = (k..n).find(|&i| !w[i][k].is_zero())?;
        w.swap(k, p);
        let piv = w[k][k].clone();
        let pivot_row = w[k].clone();
        for (i, row) in w.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let lead = row[k].clone();
            for j in 0..width {
                if j == k {
                    continue;
                }
                let t = piv.mul(&row[j])?.sub(&lead.mul(&pivot_row[j])?)?;
                row[j] = t.div_exact(&prev)?;
            }
            row[k] = C {
                re: T::nil(),
                im: T::nil(),
            };
        }
        prev = piv;
    }
    let d = w[n - 1][n - 1].clone();
    let rhs = w.into_iter().map(|r| r[n..].to_vec()).collect();
    Some((d, rhs))
}

/// A matrix stored as Gaussian-integer numerators over one positive denominator.
///
/// Products and sums avoid per-entry gcd normalization, which makes repeated
/// evaluation of matrix expressions much cheaper than entrywise rationals. Rank and
/// inertia ignore the positive denominator.
#[derive(Clone, Debug)]
pub struct ScaledMatrix {
    rows: usize,
    cols: usize,
    num: Vec<C<BigInt>>,
    den: BigInt,
}

fn bz() -> C<BigInt> {
    C {
        re: BigInt::zero(),
        im: BigInt::zero(),
    }
}

fn cz_add(a: &C<BigInt>, b: &C<BigInt>) -> C<BigInt> {
    C {
        re: &a.re + &b.re,
        im: &a.im + &b.im,
    }
}

fn cz_mul(a: &C<BigInt>, b: &C<BigInt>) -> C<BigInt> {
    if a.im.is_zero() && b.im.is_zero() {
        return C {
            re: &a.re * &b.re,
            im: BigInt::zero(),
        };
    }
    C {
        re: &a.re * &b.re - &a.im * &b.im,
        im: &a.re * &b.im + &a.im * &b.re,
    }
}

fn cz_scale(a: &C<BigInt>, k: &BigInt) -> C<BigInt> {
    C {
        re: &a.re * k,
        im: if a.im.is_zero() {
            BigInt::zero()
        } else {
            &a.im * k
        },
    }
}

impl ScaledMatrix {
    pub fn from_matrix(a: &Matrix) -> Self {
        let mut l = BigInt::one();
        for z in a.entries() {
            l = l.lcm(z.re().denom());
            l = l.lcm(z.im().denom());
        }
        let num = a
            .entries()
            .iter()
            .map(|z| C {
                re: z.re().numer() * (&l / z.re().denom()),
                im: z.im().numer() * (&l / z.im().denom()),
            })
            .collect();
        ScaledMatrix {
            rows: a.rows(),
            cols: a.cols(),
            num,
            den: l,
        }
    }

    pub fn to_matrix(&self) -> Matrix {
        let data = self
            .num
            .iter()
            .map(|z| {
                GaussianRational::new(
                    Rational::new(z.re.clone(), self.den.clone()),
                    Rational::new(z.im.clone(), self.den.clone()),
                )
            })
            .collect();
        Matrix::new(self.rows, self.cols, data).expect("shape")
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// The integer numerator matrix.
    pub fn numerators(&self) -> Matrix {
        let data = self
            .num
            .iter()
            .map(|z| {
                GaussianRational::new(
                    Rational::from_integer(z.re.clone()),
                    Rational::from_integer(z.im.clone()),
                )
            })
            .collect();
        Matrix::new(self.rows, self.cols, data).expect("shape")
    }

    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ScaledMatrix {
            rows,
            cols,
            num: vec![bz(); rows * cols],
            den: BigInt::one(),
        }
    }

    fn at(&self, i: usize, j: usize) -> &C<BigInt> {
        &self.num[i * self.cols + j]
    }

    /// Divides numerators and denominator by their common content.
    fn normalize(&mut self) {
        let mut g = self.den.clone();
        for z in &self.num {
            if g.is_one() {
                return;
            }
            g = g.gcd(&z.re).gcd(&z.im);
        }
        if g.is_one() || g.is_zero() {
            return;
        }
        for z in &mut self.num {
            z.re = &z.re / &g;
            z.im = &z.im / &g;
        }
        self.den = &self.den / &g;
    }

    pub fn mul(&self, o: &ScaledMatrix) -> ScaledMatrix {
        assert_eq!(self.cols, o.rows, "scaled product shape");
        let mut num = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = bz();
                for k in 0..self.cols {
                    let a = self.at(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    let b = o.at(k, j);
                    if !b.is_zero() {
                        acc = cz_add(&acc, &cz_mul(a, b));
                    }
                }
                num.push(acc);
            }
        }
        let mut out = ScaledMatrix {
            rows: self.rows,
            cols: o.cols,
            num,
            den: &self.den * &o.den,
        };
        out.normalize();
        out
    }

    fn combine(&self, o: &ScaledMatrix, sign: i8) -> ScaledMatrix {
        assert_eq!(self.shape(), o.shape(), "scaled sum shape");
        let (den, sa, sb) = if self.den == o.den {
            (self.den.clone(), BigInt::one(), BigInt::one())
        } else {
            let l = self.den.lcm(&o.den);
            let sa = &l / &self.den;
            let sb = &l / &o.den;
            (l, sa, sb)
        };
        let sb = if sign < 0 { -sb } else { sb };
        let num = self
            .num
            .iter()
            .zip(&o.num)
            .map(|(a, b)| cz_add(&cz_scale(a, &sa), &cz_scale(b, &sb)))
            .collect();
        let mut out = ScaledMatrix {
            rows: self.rows,
            cols: self.cols,
            num,
            den,
        };
        out.normalize();
        out
    }

    pub fn add(&self, o: &ScaledMatrix) -> ScaledMatrix {
        self.combine(o, 1)
    }

    pub fn sub(&self, o: &ScaledMatrix) -> ScaledMatrix {
        self.combine(o, -1)
    }

    pub fn adjoint(&self) -> ScaledMatrix {
        let mut num = Vec::with_capacity(self.num.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                let z = self.at(i, j);
                num.push(C {
                    re: z.re.clone(),
                    im: -&z.im,
                });
            }
        }
        ScaledMatrix {
            rows: self.cols,
            cols: self.rows,
            num,
            den: self.den.clone(),
        }
    }

    /// `K⁻¹ B` for nonsingular square `K = self`; `None` if singular.
    pub fn solve(&self, b: &ScaledMatrix) -> Option<ScaledMatrix> {
        let n = self.rows;
        assert_eq!(self.cols, n, "solve needs a square matrix");
        assert_eq!(b.rows, n, "solve shape");
        if n == 0 {
            return Some(ScaledMatrix::zeros(0, b.cols));
        }
        let aug: Vec<Vec<C<BigInt>>> = (0..n)
            .map(|i| {
                let mut row = self.num[i * n..(i + 1) * n].to_vec();
                row.extend_from_slice(&b.num[i * b.cols..(i + 1) * b.cols]);
                row
            })
            .collect();
        let (d, x) = match to_small(&aug).map(|s| ff_solve(s, n)) {
            Some(Some((d, x))) => (
                C {
                    re: BigInt::from(d.re),
                    im: BigInt::from(d.im),
                },
                x.into_iter()
                    .map(|r| {
                        r.into_iter()
                            .map(|z| C {
                                re: BigInt::from(z.re),
                                im: BigInt::from(z.im),
                            })
                            .collect::<Vec<_>>()
                    })
                    .collect::<Vec<_>>(),
            ),
            _ => ff_solve(aug, n)?,
        };
        // K⁻¹B = (dK / dB) · (Nk⁻¹ Nb) and Nk⁻¹ Nb = X / d; clear the complex d
        // by multiplying with its conjugate
        let dn = d.norm().expect("BigInt");
        let dconj = d.conj().expect("BigInt");
        let num = x
            .into_iter()
            .flatten()
            .map(|z| cz_scale(&cz_mul(&z, &dconj), &self.den))
            .collect();
        let mut out = ScaledMatrix {
            rows: n,
            cols: b.cols,
            num,
            den: &b.den * &dn,
        };
        if out.den.is_negative() {
            out.den = -out.den;
            for z in &mut out.num {
                z.re = -&z.re;
                z.im = -&z.im;
            }
        }
        out.normalize();
        Some(out)
    }

    pub fn scale_int(&self, k: &BigInt) -> ScaledMatrix {
        let mut out = ScaledMatrix {
            rows: self.rows,
            cols: self.cols,
            num: self.num.iter().map(|z| cz_scale(z, k)).collect(),
            den: self.den.clone(),
        };
        out.normalize();
        out
    }

    pub fn select_columns(&self, cols: &[usize]) -> ScaledMatrix {
        let mut num = Vec::with_capacity(self.rows * cols.len());
        for i in 0..self.rows {
            for &j in cols {
                num.push(self.at(i, j).clone());
            }
        }
        ScaledMatrix {
            rows: self.rows,
            cols: cols.len(),
            num,
            den: self.den.clone(),
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> ScaledMatrix {
        let mut num = Vec::with_capacity(rows.len() * self.cols);
        for &i in rows {
            num.extend_from_slice(&self.num[i * self.cols..(i + 1) * self.cols]);
        }
        ScaledMatrix {
            rows: rows.len(),
            cols: self.cols,
            num,
            den: self.den.clone(),
        }
    }

    pub(crate) fn rows_vec(&self) -> Vec<Vec<C<BigInt>>> {
        self.num
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(|r| r.to_vec())
            .collect()
    }

    pub fn rank(&self) -> usize {
        echelon_of(self.rows_vec(), self.cols).rank
    }

    /// `(i+, i-)`; the matrix must be Hermitian.
    pub fn inertia_pm(&self) -> (usize, usize) {
        debug_assert_eq!(self.rows, self.cols);
        if self.rows == 0 {
            return (0, 0);
        }
        inertia_of(self.rows_vec())
    }
}
