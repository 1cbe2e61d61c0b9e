use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

/// `V_k(y) = sum_j t[j] y^(k - 2j)`, the polynomials with `V_0 = 1`, `V_1 = y`,
/// `V_{k+1} = 2y V_k + V_{k-1}`.
///
/// They are the Chebyshev polynomials of the first kind seen along the
/// imaginary axis: `T_k(i y) = i^k V_k(y)`. This is what turns
/// `cos(k * arccos(i y))` into a polynomial with positive integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChebV {
    order: usize,
    coeffs: Vec<BigInt>,
}

impl ChebV {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `t[j]`, the coefficient of `y^(k - 2j)`, for `j = 0..=k/2`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn eval_f64(&self, y: f64) -> f64 {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(j, t)| t.to_f64().unwrap_or(f64::NAN) * y.powi((self.order - 2 * j) as i32))
            .sum()
    }
}

/// Growable table of `V_k` coefficient rows.
#[derive(Clone, Debug, Default)]
pub struct ChebTable {
    rows: Vec<Vec<BigInt>>,
}

impl ChebTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Number of orders currently tabulated.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn extend_to(&mut self, k: usize) {
        while self.rows.len() <= k {
            let next = match self.rows.len() {
                0 | 1 => vec![BigInt::one()],
                n => {
                    // t[n][j] = 2 t[n-1][j] + t[n-2][j-1]
                    let prev = &self.rows[n - 1];
                    let prev2 = &self.rows[n - 2];
                    (0..=n / 2)
                        .map(|j| {
                            let mut t = prev.get(j).map(|x| x * 2u32).unwrap_or_default();
                            if j > 0 {
                                t += &prev2[j - 1];
                            }
                            t
                        })
                        .collect()
                }
            };
            self.rows.push(next);
        }
    }

    pub fn row(&mut self, k: usize) -> &[BigInt] {
        self.extend_to(k);
        &self.rows[k]
    }

    pub fn get(&mut self, k: usize) -> ChebV {
        ChebV {
            order: k,
            coeffs: self.row(k).to_vec(),
        }
    }
}

static TABLE: Mutex<ChebTable> = Mutex::new(ChebTable { rows: Vec::new() });

/// `V_k`, served from a process-wide memo table.
pub fn cheb_v(k: usize) -> ChebV {
    let mut table = TABLE.lock().unwrap_or_else(|e| e.into_inner());
    table.get(k)
}
