//! Coin operators and their per-vertex assignment.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Result, WalkError};
use crate::graph::{PortGraph, VertexId};

pub type CoinMatrix = DMatrix<Complex64>;

/// Absolute tolerance used for every unitarity check.
pub const UNITARITY_TOLERANCE: f64 = 1e-12;

/// Largest coin dimension produced by [`tensor`].
pub const MAX_COIN_DIMENSION: usize = 4096;

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn identity(d: usize) -> CoinMatrix {
    CoinMatrix::identity(d, d)
}

pub fn hadamard() -> CoinMatrix {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    CoinMatrix::from_row_slice(2, 2, &[real(h), real(h), real(h), real(-h)])
}

pub fn pauli_x() -> CoinMatrix {
    CoinMatrix::from_row_slice(2, 2, &[real(0.0), real(1.0), real(1.0), real(0.0)])
}

/// The `d`-dimensional Grover diffusion coin: `(2 - d)/d` on the diagonal,
/// `2/d` everywhere else.
pub fn grover(d: usize) -> Result<CoinMatrix> {
    if d == 0 {
        return Err(WalkError::ZeroDimension);
    }
    let df = d as f64;
    let diag = (2.0 - df) / df;
    let off = 2.0 / df;
    Ok(CoinMatrix::from_fn(d, d, |i, j| {
        real(if i == j { diag } else { off })
    }))
}

/// Kronecker product `a ⊗ b`.
pub fn tensor(a: &CoinMatrix, b: &CoinMatrix) -> Result<CoinMatrix> {
    let dim = a
        .nrows()
        .checked_mul(b.nrows())
        .filter(|&d| d <= MAX_COIN_DIMENSION)
        .ok_or(WalkError::DimensionOverflow(
            a.nrows().saturating_mul(b.nrows()),
        ))?;
    debug_assert_eq!(dim, a.nrows() * b.nrows());
    Ok(a.kronecker(b))
}

/// Permutation coin sending basis state `i` to `perm[i]`.
pub fn permutation(perm: &[usize]) -> Result<CoinMatrix> {
    let d = perm.len();
    if d == 0 {
        return Err(WalkError::ZeroDimension);
    }
    let mut seen = vec![false; d];
    for &p in perm {
        if p >= d || std::mem::replace(&mut seen[p], true) {
            return Err(WalkError::NotAPermutation(d));
        }
    }
    let mut m = CoinMatrix::zeros(d, d);
    for (i, &p) in perm.iter().enumerate() {
        m[(p, i)] = real(1.0);
    }
    Ok(m)
}

/// Max-norm of `U^dag U - I`.
pub fn unitarity_defect(m: &CoinMatrix) -> f64 {
    let d = m.nrows();
    let g = m.adjoint() * m;
    let mut worst = 0.0f64;
    for i in 0..d {
        for j in 0..d {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g[(i, j)] - real(target)).norm());
        }
    }
    worst
}

/// Accepts an arbitrary square matrix if it is unitary within
/// [`UNITARITY_TOLERANCE`].
pub fn custom(m: CoinMatrix) -> Result<CoinMatrix> {
    if !m.is_square() {
        return Err(WalkError::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    let defect = unitarity_defect(&m);
    if defect < UNITARITY_TOLERANCE {
        Ok(m)
    } else {
        Err(WalkError::NonUnitary { defect })
    }
}

/// One coin matrix per vertex, in vertex order. The global coin is their
/// direct sum.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinAssignment {
    coins: Vec<CoinMatrix>,
}

impl CoinAssignment {
    /// Checks that every matrix is square, unitary and sized to its vertex.
    pub fn new(graph: &PortGraph, coins: Vec<CoinMatrix>) -> Result<Self> {
        let assignment = Self::new_unchecked(coins);
        assignment.check_dimensions(graph)?;
        for m in &assignment.coins {
            if !m.is_square() {
                return Err(WalkError::NotSquare {
                    rows: m.nrows(),
                    cols: m.ncols(),
                });
            }
            let defect = unitarity_defect(m);
            if defect >= UNITARITY_TOLERANCE {
                return Err(WalkError::NonUnitary { defect });
            }
        }
        Ok(assignment)
    }

    /// Skips all checks. [`CoinAssignment::max_unitarity_defect`] can be used
    /// to inspect the result afterwards.
    pub fn new_unchecked(coins: Vec<CoinMatrix>) -> Self {
        CoinAssignment { coins }
    }

    /// Builds an assignment by asking `f` for the coin of each vertex given
    /// its degree.
    pub fn from_fn<F>(graph: &PortGraph, mut f: F) -> Result<Self>
    where
        F: FnMut(VertexId, usize) -> Result<CoinMatrix>,
    {
        let coins = graph
            .degrees()
            .enumerate()
            .map(|(v, d)| f(v, d))
            .collect::<Result<Vec<_>>>()?;
        Self::new(graph, coins)
    }

    /// Grover coin of matching dimension at every vertex (`G_1 = [1]`,
    /// `G_2 = σ_x`). Isolated vertices get an empty coin.
    pub fn grover_everywhere(graph: &PortGraph) -> Self {
        Self::from_fn(graph, |_, d| {
            if d == 0 {
                Ok(CoinMatrix::zeros(0, 0))
            } else {
                grover(d)
            }
        })
        .expect("Grover coins are unitary")
    }

    pub fn check_dimensions(&self, graph: &PortGraph) -> Result<()> {
        if self.coins.len() != graph.vertex_count() {
            return Err(WalkError::CoinCountMismatch {
                expected: graph.vertex_count(),
                found: self.coins.len(),
            });
        }
        for (v, (m, d)) in self.coins.iter().zip(graph.degrees()).enumerate() {
            if m.nrows() != d || m.ncols() != d {
                return Err(WalkError::DimensionMismatch {
                    vertex: v,
                    expected: d,
                    found: m.nrows().max(m.ncols()),
                });
            }
        }
        Ok(())
    }

    pub fn max_unitarity_defect(&self) -> f64 {
        self.coins.iter().map(unitarity_defect).fold(0.0, f64::max)
    }

    pub fn get(&self, v: VertexId) -> Option<&CoinMatrix> {
        self.coins.get(v)
    }

    pub fn set(&mut self, v: VertexId, coin: CoinMatrix) {
        self.coins[v] = coin;
    }

    pub fn len(&self) -> usize {
        self.coins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coins.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, CoinMatrix> {
        self.coins.iter()
    }

    /// Text form: for each vertex a `vertex <v> <d>` line followed by `d`
    /// rows of whitespace-separated `re,im` entries.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, m) in self.coins.iter().enumerate() {
            out.push_str(&format!("vertex {v} {}\n", m.nrows()));
            for i in 0..m.nrows() {
                let row: Vec<String> = (0..m.ncols())
                    .map(|j| format!("{},{}", m[(i, j)].re, m[(i, j)].im))
                    .collect();
                out.push_str(&row.join(" "));
                out.push('\n');
            }
        }
        out
    }

    /// Parses [`to_text`](Self::to_text) output. Dimensions and unitarity are
    /// not checked here; pair with [`check_dimensions`](Self::check_dimensions).
    pub fn from_text(text: &str) -> Result<Self> {
        let mut coins = Vec::new();
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        while let Some((line_no, header)) = lines.next() {
            let fields: Vec<&str> = header.split_whitespace().collect();
            let (v, d) = match fields.as_slice() {
                ["vertex", v, d] => (
                    v.parse::<usize>()
                        .map_err(|_| WalkError::parse(line_no, "invalid vertex id"))?,
                    d.parse::<usize>()
                        .map_err(|_| WalkError::parse(line_no, "invalid dimension"))?,
                ),
                _ => {
                    return Err(WalkError::parse(
                        line_no,
                        format!("expected `vertex <v> <d>`, found {header:?}"),
                    ))
                }
            };
            if v != coins.len() {
                return Err(WalkError::parse(
                    line_no,
                    format!("expected block for vertex {}, found {v}", coins.len()),
                ));
            }
            let mut m = CoinMatrix::zeros(d, d);
            for i in 0..d {
                let (row_no, row) = lines.next().ok_or_else(|| {
                    WalkError::parse(line_no, format!("vertex {v}: missing row {i}"))
                })?;
                let entries: Vec<&str> = row.split_whitespace().collect();
                if entries.len() != d {
                    return Err(WalkError::parse(
                        row_no,
                        format!("expected {d} entries, found {}", entries.len()),
                    ));
                }
                for (j, e) in entries.iter().enumerate() {
                    m[(i, j)] = parse_complex(e, row_no)?;
                }
            }
            coins.push(m);
        }
        Ok(Self::new_unchecked(coins))
    }
}

impl std::ops::Index<VertexId> for CoinAssignment {
    type Output = CoinMatrix;

    fn index(&self, v: VertexId) -> &CoinMatrix {
        &self.coins[v]
    }
}

pub(crate) fn parse_complex(s: &str, line: usize) -> Result<Complex64> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| WalkError::parse(line, format!("expected `re,im`, found {s:?}")))?;
    let re = re
        .parse::<f64>()
        .map_err(|_| WalkError::parse(line, format!("invalid real part {re:?}")))?;
    let im = im
        .parse::<f64>()
        .map_err(|_| WalkError::parse(line, format!("invalid imaginary part {im:?}")))?;
    Ok(Complex64::new(re, im))
}
