use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::Rational;

/// Dense row-major matrix of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "ragged rows in RationalMatrix::from_rows"
        );
        let n = rows.len();
        RationalMatrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }
}

/// Why [`solve_exact`] produced no solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveFailure {
    /// The columns are linearly dependent on the given rows; more rows
    /// (evaluation points) are needed.
    RankDeficient { rank: usize, cols: usize },
    /// The system has full column rank but no solution; `row` is the first
    /// row violated by the candidate solution.
    Inconsistent { row: usize },
    /// `b` does not have one entry per row.
    ShapeMismatch { rows: usize, rhs: usize },
}

impl From<SolveFailure> for crate::Error {
    fn from(f: SolveFailure) -> Self {
        match f {
            SolveFailure::RankDeficient { rank, cols } => {
                crate::Error::InsufficientEvaluationPoints { rank, cols }
            }
            SolveFailure::Inconsistent { row } => crate::Error::Inconsistent { row },
            SolveFailure::ShapeMismatch { rows, rhs } => crate::Error::InvalidInput(format!(
                "right-hand side has {rhs} entries for {rows} rows"
            )),
        }
    }
}

const P: u64 = (1 << 61) - 1;

fn mod_p(x: &BigInt) -> u64 {
    let p = BigInt::from(P);
    let r = x.mod_floor(&p);
    r.to_u64().expect("residue fits in u64")
}

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(P)) as u64
}

fn pow_mod(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a);
        }
        a = mul_mod(a, a);
        e >>= 1;
    }
    r
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

/// Scales a rational row (with its right-hand side) to a primitive integer row.
fn integerize(row: &[Rational], rhs: &Rational) -> Vec<BigInt> {
    let mut l = BigInt::one();
    for v in row.iter().chain(std::iter::once(rhs)) {
        l = l.lcm(v.denom());
    }
    row.iter()
        .chain(std::iter::once(rhs))
        .map(|v| v.numer() * (&l / v.denom()))
        .collect()
}

/// Picks up to `cols` rows whose coefficient parts are independent modulo
/// the prime; independence mod p implies independence over the rationals.
fn select_rows_modular(rows: &[Vec<BigInt>], cols: usize) -> Vec<usize> {
    // echelon basis: (pivot column, normalized row with pivot 1)
    let mut basis: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut chosen = Vec::new();
    for (ri, row) in rows.iter().enumerate() {
        if basis.len() == cols {
            break;
        }
        let mut v: Vec<u64> = row[..cols].iter().map(mod_p).collect();
        for (pc, b) in &basis {
            let f = v[*pc];
            if f != 0 {
                for (x, y) in v.iter_mut().zip(b) {
                    *x = (*x + P - mul_mod(f, *y)) % P;
                }
            }
        }
        if let Some(pc) = v.iter().position(|&x| x != 0) {
            let inv = inv_mod(v[pc]);
            for x in v.iter_mut() {
                *x = mul_mod(*x, inv);
            }
            basis.push((pc, v));
            chosen.push(ri);
        }
    }
    chosen
}

/// Same contract as [`select_rows_modular`] but over the rationals; used
/// only when the modular probe reports a deficient rank.
fn select_rows_exact(rows: &[Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut basis: Vec<(usize, Vec<Rational>)> = Vec::new();
    let mut chosen = Vec::new();
    for (ri, row) in rows.iter().enumerate() {
        if basis.len() == cols {
            break;
        }
        let mut v: Vec<Rational> = row[..cols]
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        for (pc, b) in &basis {
            let f = v[*pc].clone();
            if !f.is_zero() {
                for (x, y) in v.iter_mut().zip(b) {
                    *x -= &f * y;
                }
            }
        }
        if let Some(pc) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[pc].recip();
            for x in v.iter_mut() {
                *x *= &inv;
            }
            basis.push((pc, v));
            chosen.push(ri);
        }
    }
    chosen
}

/// Fraction-free (Bareiss) elimination of a nonsingular square augmented
/// system followed by rational back substitution.
fn bareiss_solve(mut m: Vec<Vec<BigInt>>) -> Option<Vec<Rational>> {
    let n = m.len();
    let mut prev = BigInt::one();
    for k in 0..n {
        // pivot: nonzero entry of smallest bit length in column k
        let piv = (k..n)
            .filter(|&r| m[r][k].sign() != Sign::NoSign)
            .min_by_key(|&r| m[r][k].bits())?;
        m.swap(k, piv);
        let (top, rest) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        for row in rest.iter_mut() {
            let f = row[k].clone();
            for j in k + 1..=n {
                let v = &pivot_row[k] * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in i + 1..n {
            if !m[i][j].is_zero() {
                acc -= &x[j] * Rational::from_integer(m[i][j].clone());
            }
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Some(x)
}

/// Rank of `a` modulo the prime `2^61 - 1`. This is a lower bound for the
/// rank over the rationals, so a full-column-rank answer is certain.
pub fn modular_rank(a: &RationalMatrix) -> usize {
    let zero = Rational::zero();
    let rows: Vec<Vec<BigInt>> = (0..a.rows).map(|r| integerize(a.row(r), &zero)).collect();
    select_rows_modular(&rows, a.cols).len()
}

/// Solves the overdetermined system `a * x = b` exactly.
///
/// A maximal independent row subset is chosen (modulo a large prime, with
/// an exact fallback), solved by Bareiss elimination, and the candidate is
/// then checked against every row without tolerance.
pub fn solve_exact(a: &RationalMatrix, b: &[Rational]) -> Result<Vec<Rational>, SolveFailure> {
    if b.len() != a.rows {
        return Err(SolveFailure::ShapeMismatch {
            rows: a.rows,
            rhs: b.len(),
        });
    }
    let cols = a.cols;
    if cols == 0 {
        return match b.iter().position(|v| !v.is_zero()) {
            Some(row) => Err(SolveFailure::Inconsistent { row }),
            None => Ok(Vec::new()),
        };
    }
    let int_rows: Vec<Vec<BigInt>> = (0..a.rows).map(|r| integerize(a.row(r), &b[r])).collect();
    let mut chosen = select_rows_modular(&int_rows, cols);
    if chosen.len() < cols {
        chosen = select_rows_exact(&int_rows, cols);
        if chosen.len() < cols {
            return Err(SolveFailure::RankDeficient {
                rank: chosen.len(),
                cols,
            });
        }
    }
    let square: Vec<Vec<BigInt>> = chosen.iter().map(|&r| int_rows[r].clone()).collect();
    let x = bareiss_solve(square).expect("selected rows are independent");
    for (r, rhs) in b.iter().enumerate().take(a.rows) {
        let lhs: Rational = a
            .row(r)
            .iter()
            .zip(&x)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, v)| c * v)
            .sum();
        if &lhs != rhs {
            return Err(SolveFailure::Inconsistent { row: r });
        }
    }
    Ok(x)
}
