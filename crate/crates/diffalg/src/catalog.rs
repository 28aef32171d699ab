//! Built-in example algebras with known invariants.
//!
//! The catalog doubles as the fixture set for the verification suite: each
//! entry can carry the expected dimensions of its derivation space, center
//! and radical, plus the expected reflexivity verdict, all of which the
//! test suite recomputes from scratch.

use crate::algebra::Algebra;
use crate::rat::{rat, Rat};
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::sync::Arc;
use thiserror::Error;

/// A catalog builder was asked for a size outside its supported range.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("matrix algebra size {0} is outside 1..=4")]
    MatrixSize(usize),
    #[error("truncation order {0} is outside 1..=6")]
    TruncationOrder(usize),
    #[error("upper-triangular size {0} is outside 1..=3")]
    TriangularSize(usize),
}

/// Invariants frozen ahead of time for a catalog algebra; the suite checks
/// computed values against these exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expected {
    pub derivations: usize,
    pub center: usize,
    pub radical: usize,
    /// Verdict for the pipeline seeded with the full derivation space.
    pub reflexive: bool,
}

/// A named example algebra, optionally with frozen expected invariants.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub algebra: Arc<Algebra>,
    pub expected: Option<Expected>,
}

fn zero_table(n: usize) -> Vec<Vec<Vec<Rat>>> {
    vec![vec![vec![Rat::zero(); n]; n]; n]
}

/// The full matrix algebra M_n(Q) on matrix units, `E_pq E_rs = [q=r] E_ps`.
pub fn matrix_algebra(n: usize) -> Result<Arc<Algebra>, CatalogError> {
    if !(1..=4).contains(&n) {
        return Err(CatalogError::MatrixSize(n));
    }
    let dim = n * n;
    let idx = |p: usize, q: usize| p * n + q;
    let mut constants = zero_table(dim);
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    if q == r {
                        constants[idx(p, q)][idx(r, s)][idx(p, s)] = Rat::one();
                    }
                }
            }
        }
    }
    let mut unit = vec![Rat::zero(); dim];
    let mut names = Vec::with_capacity(dim);
    for p in 0..n {
        unit[idx(p, p)] = Rat::one();
        for q in 0..n {
            names.push(format!("E{}{}", p + 1, q + 1));
        }
    }
    Ok(Algebra::new(names, unit, constants).expect("matrix algebra shapes"))
}

/// `Q[x]/(x^k)` on the basis 1, x, ..., x^(k-1).
pub fn truncated_poly(k: usize) -> Result<Arc<Algebra>, CatalogError> {
    if !(1..=6).contains(&k) {
        return Err(CatalogError::TruncationOrder(k));
    }
    let mut constants = zero_table(k);
    for (i, row) in constants.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            if i + j < k {
                cell[i + j] = Rat::one();
            }
        }
    }
    let mut unit = vec![Rat::zero(); k];
    unit[0] = Rat::one();
    let names = (0..k)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    Ok(Algebra::new(names, unit, constants).expect("truncated polynomial shapes"))
}

/// The dual numbers `Q[x]/(x^2)`.
pub fn dual_numbers() -> Arc<Algebra> {
    truncated_poly(2).expect("2 is within the truncation bound")
}

/// Upper-triangular n x n rational matrices.
pub fn upper_triangular(n: usize) -> Result<Arc<Algebra>, CatalogError> {
    if !(1..=3).contains(&n) {
        return Err(CatalogError::TriangularSize(n));
    }
    let mut pairs = Vec::new();
    for p in 0..n {
        for q in p..n {
            pairs.push((p, q));
        }
    }
    let dim = pairs.len();
    let idx = |p: usize, q: usize| pairs.iter().position(|&pq| pq == (p, q)).unwrap();
    let mut constants = zero_table(dim);
    for (i, &(p, q)) in pairs.iter().enumerate() {
        for (j, &(r, s)) in pairs.iter().enumerate() {
            if q == r {
                constants[i][j][idx(p, s)] = Rat::one();
            }
        }
    }
    let mut unit = vec![Rat::zero(); dim];
    for p in 0..n {
        unit[idx(p, p)] = Rat::one();
    }
    let names = pairs
        .iter()
        .map(|&(p, q)| format!("E{}{}", p + 1, q + 1))
        .collect();
    Ok(Algebra::new(names, unit, constants).expect("upper triangular shapes"))
}

/// The rational quaternions (-1, -1 / Q): i^2 = j^2 = -1, ij = k = -ji.
#[allow(clippy::needless_range_loop)] // index loops mirror the c[i][j][k] table
pub fn quaternion_algebra() -> Arc<Algebra> {
    let mut c = zero_table(4);
    // basis order: 1, i, j, k
    for t in 0..4 {
        c[0][t][t] = Rat::one();
        if t > 0 {
            c[t][0][t] = Rat::one();
        }
    }
    for (a, b, s, out) in [
        (1, 1, -1, 0),
        (2, 2, -1, 0),
        (3, 3, -1, 0),
        (1, 2, 1, 3),
        (2, 1, -1, 3),
        (2, 3, 1, 1),
        (3, 2, -1, 1),
        (3, 1, 1, 2),
        (1, 3, -1, 2),
    ] {
        c[a][b][out] = rat(s);
    }
    let names = ["1", "i", "j", "k"].iter().map(|s| s.to_string()).collect();
    Algebra::new(names, vec![rat(1), rat(0), rat(0), rat(0)], c).expect("quaternion shapes")
}

/// Groups with a built-in rational group algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FiniteGroup {
    C2,
    C3,
    S3,
}

/// Group algebra `Q[G]` with the group elements as basis, `e_g e_h = e_gh`.
pub fn group_algebra(group: FiniteGroup) -> Arc<Algebra> {
    let (names, table): (Vec<String>, Vec<Vec<usize>>) = match group {
        FiniteGroup::C2 => {
            let names = vec!["e".to_string(), "g".to_string()];
            (names, vec![vec![0, 1], vec![1, 0]])
        }
        FiniteGroup::C3 => {
            let names = vec!["e".to_string(), "g".to_string(), "g^2".to_string()];
            let table = (0..3).map(|i| (0..3).map(|j| (i + j) % 3).collect()).collect();
            (names, table)
        }
        FiniteGroup::S3 => {
            // permutations of {0,1,2}; product st = "apply t, then s"
            let perms: [[usize; 3]; 6] = [
                [0, 1, 2],
                [1, 0, 2],
                [2, 1, 0],
                [0, 2, 1],
                [1, 2, 0],
                [2, 0, 1],
            ];
            let names = ["e", "(12)", "(13)", "(23)", "(123)", "(132)"]
                .iter()
                .map(|s| s.to_string())
                .collect();
            let compose = |s: &[usize; 3], t: &[usize; 3]| {
                let st = [s[t[0]], s[t[1]], s[t[2]]];
                perms.iter().position(|p| *p == st).unwrap()
            };
            let table = perms
                .iter()
                .map(|s| perms.iter().map(|t| compose(s, t)).collect())
                .collect();
            (names, table)
        }
    };
    let n = names.len();
    let mut constants = zero_table(n);
    for i in 0..n {
        for j in 0..n {
            constants[i][j][table[i][j]] = Rat::one();
        }
    }
    let mut unit = vec![Rat::zero(); n];
    unit[0] = Rat::one();
    Algebra::new(names, unit, constants).expect("group algebra shapes")
}

/// Direct product A x B with componentwise operations; the two factors
/// annihilate each other.
#[allow(clippy::needless_range_loop)] // index loops mirror the c[i][j][k] table
pub fn direct_product(a: &Algebra, b: &Algebra) -> Arc<Algebra> {
    let (na, nb) = (a.dim(), b.dim());
    let dim = na + nb;
    let mut constants = zero_table(dim);
    for i in 0..na {
        for j in 0..na {
            for k in 0..na {
                constants[i][j][k] = a.structure_constants()[i][j][k].clone();
            }
        }
    }
    for i in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                constants[na + i][na + j][na + k] = b.structure_constants()[i][j][k].clone();
            }
        }
    }
    let mut unit = Vec::with_capacity(dim);
    unit.extend(a.unit_coords().iter().cloned());
    unit.extend(b.unit_coords().iter().cloned());
    let mut names: Vec<String> = a.basis_names().iter().map(|n| format!("{n}.a")).collect();
    names.extend(b.basis_names().iter().map(|n| format!("{n}.b")));
    Algebra::new(names, unit, constants).expect("direct product shapes")
}

/// Deterministic pseudo-random algebra: a random finitely generated
/// subalgebra of a small matrix algebra, re-expressed on its own basis.
/// Random structure constants would almost never be associative; taking a
/// multiplicatively closed subspace of M_k(Q) guarantees validity. The
/// result has dimension at most `max_dim` and is a pure function of
/// `(seed, max_dim)`.
pub fn random_algebra(seed: u64, max_dim: usize) -> Arc<Algebra> {
    assert!(
        (1..=6).contains(&max_dim),
        "random algebra dimension cap must lie in 1..=6"
    );
    if max_dim == 1 {
        return truncated_poly(1).expect("1 is within the truncation bound");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((max_dim as u64) << 32));
    let m2 = matrix_algebra(2).expect("2 is within the matrix bound");
    let m3 = matrix_algebra(3).expect("3 is within the matrix bound");
    let entry = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-2..=2));
    for _ in 0..64 {
        // by Cayley-Hamilton single generators stay within dim k, so some
        // strategy below always fits the cap and the loop terminates early
        let strategy = rng.gen_range(0..4u8);
        let (ambient, generators): (&Arc<Algebra>, Vec<Vec<Rat>>) = match strategy {
            0 => {
                let g = (0..4).map(|_| entry(&mut rng)).collect();
                (&m2, vec![g])
            }
            1 => {
                let g = (0..9).map(|_| entry(&mut rng)).collect();
                (&m3, vec![g])
            }
            2 => {
                let g1 = (0..4).map(|_| entry(&mut rng)).collect();
                let g2 = (0..4).map(|_| entry(&mut rng)).collect();
                (&m2, vec![g1, g2])
            }
            _ => {
                // a diagonal and a strictly upper-triangular generator:
                // closure sits inside the triangular matrices and is
                // usually not semisimple
                let mut d = vec![Rat::zero(); 9];
                let mut nil = vec![Rat::zero(); 9];
                for p in 0..3 {
                    d[p * 3 + p] = entry(&mut rng);
                    for q in p + 1..3 {
                        nil[p * 3 + q] = entry(&mut rng);
                    }
                }
                (&m3, vec![d, nil])
            }
        };
        let closure = ambient.subalgebra_closure(&generators);
        if closure.dim() > max_dim {
            continue;
        }
        let m = closure.dim();
        let basis: Vec<Vec<Rat>> = closure.basis_vectors().map(|v| v.to_vec()).collect();
        let mut constants = zero_table(m);
        for i in 0..m {
            for j in 0..m {
                let prod = ambient.mul_coords(&basis[i], &basis[j]);
                constants[i][j] = closure
                    .coordinates_of(&prod)
                    .expect("closure is multiplicatively closed");
            }
        }
        let unit = closure
            .coordinates_of(ambient.unit_coords())
            .expect("closure contains the unit");
        let names = (1..=m).map(|i| format!("g{i}")).collect();
        return Algebra::new(names, unit, constants).expect("closure algebra shapes");
    }
    unreachable!("single-generator strategies always fit a cap of 2 or more")
}

/// All named catalog entries with their frozen invariants.
pub fn catalog() -> Vec<CatalogEntry> {
    let expect = |derivations, center, radical, reflexive| {
        Some(Expected {
            derivations,
            center,
            radical,
            reflexive,
        })
    };
    vec![
        CatalogEntry {
            name: "rationals",
            summary: "the field Q itself",
            algebra: matrix_algebra(1).unwrap(),
            expected: expect(0, 1, 0, true),
        },
        CatalogEntry {
            name: "m2",
            summary: "2x2 rational matrices",
            algebra: matrix_algebra(2).unwrap(),
            expected: expect(3, 1, 0, true),
        },
        CatalogEntry {
            name: "m3",
            summary: "3x3 rational matrices",
            algebra: matrix_algebra(3).unwrap(),
            expected: expect(8, 1, 0, true),
        },
        CatalogEntry {
            name: "dual-numbers",
            summary: "Q[x]/(x^2)",
            algebra: dual_numbers(),
            expected: expect(1, 2, 1, true),
        },
        CatalogEntry {
            name: "poly3",
            summary: "Q[x]/(x^3)",
            algebra: truncated_poly(3).unwrap(),
            expected: expect(2, 3, 2, true),
        },
        CatalogEntry {
            name: "poly4",
            summary: "Q[x]/(x^4)",
            algebra: truncated_poly(4).unwrap(),
            expected: expect(3, 4, 3, true),
        },
        CatalogEntry {
            name: "ut2",
            summary: "upper-triangular 2x2 matrices",
            algebra: upper_triangular(2).unwrap(),
            expected: expect(2, 1, 1, true),
        },
        CatalogEntry {
            name: "ut3",
            summary: "upper-triangular 3x3 matrices",
            algebra: upper_triangular(3).unwrap(),
            expected: expect(5, 1, 3, true),
        },
        CatalogEntry {
            name: "quaternions",
            summary: "rational quaternions (-1,-1/Q)",
            algebra: quaternion_algebra(),
            expected: expect(3, 1, 0, true),
        },
        CatalogEntry {
            name: "group-c2",
            summary: "group algebra Q[C2]",
            algebra: group_algebra(FiniteGroup::C2),
            expected: expect(0, 2, 0, true),
        },
        CatalogEntry {
            name: "group-c3",
            summary: "group algebra Q[C3]",
            algebra: group_algebra(FiniteGroup::C3),
            expected: expect(0, 3, 0, true),
        },
        CatalogEntry {
            name: "group-s3",
            summary: "group algebra Q[S3]",
            algebra: group_algebra(FiniteGroup::S3),
            expected: expect(3, 3, 0, true),
        },
        CatalogEntry {
            name: "m2-x-dual",
            summary: "M2(Q) x Q[x]/(x^2)",
            algebra: direct_product(&matrix_algebra(2).unwrap(), &dual_numbers()),
            expected: expect(4, 3, 1, true),
        },
    ]
}

/// Looks up a catalog entry by its name.
pub fn by_name(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}
