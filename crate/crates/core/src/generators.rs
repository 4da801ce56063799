//! Instance factories: the two CNF reductions, a brute-force SAT check,
//! seeded random frameworks and the triangle-stack family.
//!
//! Random instances are drawn from SplitMix64 (`rand_xoshiro::SplitMix64`,
//! increment `0x9E3779B97F4A7C15`, mixers `0xBF58476D1CE4E5B9` and
//! `0x94D049BB133111EB`). A uniform `u` in `[0, 1)` is `(next >> 11) * 2^-53`
//! and an attack is kept when `u < p`. Pairs are visited row by row
//! (attacker-major, diagonal included); the symmetric variant visits
//! `i <= j` only and mirrors each kept pair.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::error::{Error, ParseError, Result};
use crate::framework::ArgumentationFramework;
use crate::misenum::UndirectedGraph;

/// CNF over variables `1..=num_vars`; a negative literal is a negated variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for (i, clause) in clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > 3 {
                return Err(Error::InvalidFormula(format!(
                    "clause {} has {} literals, expected 1 to 3",
                    i + 1,
                    clause.len()
                )));
            }
            if let Some(&lit) = clause
                .iter()
                .find(|&&l| l == 0 || l.unsigned_abs() as usize > num_vars)
            {
                return Err(Error::InvalidFormula(format!(
                    "clause {} uses literal {lit} outside 1..={num_vars}",
                    i + 1
                )));
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Whether `assignment` (bit `j - 1` is variable `j`) satisfies every clause.
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let value = assignment >> (l.unsigned_abs() - 1) & 1 == 1;
                value == (l > 0)
            })
        })
    }
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let err = |line: usize, message: String| Error::Parse(ParseError::Dimacs { line, message });
    let mut header: Option<(usize, usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if let Some(rest) = line.strip_prefix('p') {
            if header.is_some() {
                return Err(err(line_no, "second problem line".into()));
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            match fields.as_slice() {
                ["cnf", n, m] => {
                    let n = n
                        .parse()
                        .map_err(|_| err(line_no, format!("bad variable count `{n}`")))?;
                    let m = m
                        .parse()
                        .map_err(|_| err(line_no, format!("bad clause count `{m}`")))?;
                    header = Some((n, m, line_no));
                }
                _ => return Err(err(line_no, "expected `p cnf <vars> <clauses>`".into())),
            }
            continue;
        }
        if header.is_none() {
            return Err(err(line_no, "clause before the problem line".into()));
        }
        for token in line.split_whitespace() {
            let lit: i32 = token
                .parse()
                .map_err(|_| err(line_no, format!("bad literal `{token}`")))?;
            if lit == 0 {
                clauses.push(std::mem::take(&mut current));
            } else {
                current.push(lit);
            }
        }
    }
    let Some((n, m, header_line)) = header else {
        return Err(err(0, "missing problem line".into()));
    };
    if !current.is_empty() {
        return Err(err(
            text.lines().count(),
            "last clause is not terminated by 0".into(),
        ));
    }
    if clauses.len() != m {
        return Err(err(
            header_line,
            format!("header announces {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses)
}

pub fn render_dimacs(c: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", c.num_vars, c.clauses.len());
    for clause in &c.clauses {
        for lit in clause {
            let _ = write!(out, "{lit} ");
        }
        out.push_str("0\n");
    }
    out
}

/// Exhaustive assignment scan.
pub fn sat_bruteforce(c: &CnfFormula) -> Result<bool> {
    if c.num_vars > 20 {
        return Err(Error::Precondition(format!(
            "brute-force SAT limited to 20 variables, got {}",
            c.num_vars
        )));
    }
    Ok((0..1u64 << c.num_vars).any(|a| c.satisfied_by(a)))
}

fn literal_labels(n: usize) -> Vec<String> {
    (1..=n)
        .flat_map(|j| [format!("x{j}"), format!("nx{j}")])
        .collect()
}

/// Index of literal `lit` given the index of `x1`.
fn literal_index(first: usize, lit: i32) -> usize {
    let j = lit.unsigned_abs() as usize - 1;
    first + 2 * j + usize::from(lit < 0)
}

fn require_clauses(c: &CnfFormula) -> Result<()> {
    if c.clauses.is_empty() {
        return Err(Error::Precondition(
            "reduction needs at least one clause".into(),
        ));
    }
    Ok(())
}

/// Clause-literal and literal-literal attacks shared by both reductions.
fn literal_attacks(
    c: &CnfFormula,
    first_clause: usize,
    first_literal: usize,
) -> Vec<(usize, usize)> {
    let mut attacks = Vec::new();
    for (i, clause) in c.clauses.iter().enumerate() {
        for &lit in clause {
            let l = literal_index(first_literal, lit);
            attacks.push((l, first_clause + i));
            attacks.push((first_clause + i, l));
        }
    }
    for j in 0..c.num_vars {
        let pos = first_literal + 2 * j;
        attacks.push((pos, pos + 1));
        attacks.push((pos + 1, pos));
    }
    attacks
}

/// Framework with a non-admissible naive set iff `c` is satisfiable.
///
/// Arguments `x, y, C1..Cm, x1, nx1, ..., xn, nxn`.
pub fn reduce_naf(c: &CnfFormula) -> Result<ArgumentationFramework> {
    require_clauses(c)?;
    let m = c.clauses.len();
    let (x, y) = (0, 1);
    let first_clause = 2;
    let first_literal = first_clause + m;
    let mut labels = vec!["x".to_string(), "y".to_string()];
    labels.extend((1..=m).map(|i| format!("C{i}")));
    labels.extend(literal_labels(c.num_vars));

    let mut attacks = vec![(y, x)];
    for i in 0..m {
        attacks.push((first_clause + i, y));
        attacks.push((y, first_clause + i));
    }
    attacks.extend(literal_attacks(c, first_clause, first_literal));
    ArgumentationFramework::new(labels, attacks)
}

/// Framework that is admissible-closed iff `c` is unsatisfiable.
///
/// Arguments `x, y, z1, z2, C1..Cm, x1, nx1, ..., xn, nxn`.
pub fn reduce_acaf(c: &CnfFormula) -> Result<ArgumentationFramework> {
    require_clauses(c)?;
    let m = c.clauses.len();
    let (x, y, z1, z2) = (0, 1, 2, 3);
    let first_clause = 4;
    let first_literal = first_clause + m;
    let mut labels: Vec<String> = ["x", "y", "z1", "z2"].map(String::from).to_vec();
    labels.extend((1..=m).map(|i| format!("C{i}")));
    labels.extend(literal_labels(c.num_vars));

    let mut attacks = vec![(z1, y), (z2, y), (z1, z2), (z2, z1), (y, x)];
    attacks.extend((0..m).map(|i| (first_clause + i, z1)));
    attacks.extend(literal_attacks(c, first_clause, first_literal));
    ArgumentationFramework::new(labels, attacks)
}

fn uniform(rng: &mut SplitMix64) -> f64 {
    rng.gen::<f64>()
}

fn check_probability(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Precondition(format!(
            "attack probability {p} outside [0, 1]"
        )));
    }
    Ok(())
}

/// Random framework on arguments labelled `0..n`.
pub fn random_af(n: usize, p: f64, seed: u64, symmetric: bool) -> Result<ArgumentationFramework> {
    check_probability(p)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut attacks = Vec::new();
    for i in 0..n {
        let start = if symmetric { i } else { 0 };
        for j in start..n {
            if uniform(&mut rng) < p {
                attacks.push((i, j));
                if symmetric {
                    attacks.push((j, i));
                }
            }
        }
    }
    ArgumentationFramework::with_size(n, attacks)
}

/// Random framework in which no argument has more than `max_in_degree`
/// attackers. For each target in turn the candidate attackers are shuffled
/// and kept with probability `p` until the cap is reached.
pub fn random_af_capped(
    n: usize,
    p: f64,
    max_in_degree: usize,
    seed: u64,
) -> Result<ArgumentationFramework> {
    check_probability(p)?;
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut attacks = Vec::new();
    let mut candidates: Vec<usize> = (0..n).collect();
    for target in 0..n {
        candidates.shuffle(&mut rng);
        let mut kept = 0;
        for &attacker in &candidates {
            if kept == max_in_degree {
                break;
            }
            if uniform(&mut rng) < p {
                attacks.push((attacker, target));
                kept += 1;
            }
        }
    }
    ArgumentationFramework::with_size(n, attacks)
}

/// Random CNF with clauses of 1 to 3 literals over distinct variables.
pub fn random_cnf(num_vars: usize, num_clauses: usize, seed: u64) -> Result<CnfFormula> {
    if num_vars == 0 && num_clauses > 0 {
        return Err(Error::InvalidFormula(
            "clauses need at least one variable".into(),
        ));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let mut vars: Vec<i32> = (1..=num_vars as i32).collect();
    let clauses = (0..num_clauses)
        .map(|_| {
            let width = rng.gen_range(1..=3.min(num_vars));
            vars.shuffle(&mut rng);
            vars[..width]
                .iter()
                .map(|&v| if rng.gen::<bool>() { v } else { -v })
                .collect()
        })
        .collect();
    CnfFormula::new(num_vars, clauses)
}

/// `k` disjoint triangles: `3k` vertices and `3^k` maximal independent sets.
pub fn triangle_stack(k: usize) -> UndirectedGraph {
    UndirectedGraph::from_edges(
        3 * k,
        (0..k).flat_map(|t| {
            let b = 3 * t;
            [(b, b + 1), (b + 1, b + 2), (b, b + 2)]
        }),
    )
}

/// The framework form of [`triangle_stack`], with symmetric attacks.
pub fn triangle_stack_framework(k: usize) -> ArgumentationFramework {
    let g = triangle_stack(k);
    ArgumentationFramework::with_size(
        3 * k,
        g.edges()
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .collect::<Vec<_>>(),
    )
    .expect("indices in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::misenum::enum_mis;
    use crate::oracle::{self, enum_family, OracleLimit, Semantics};
    use crate::recasting::is_admissible_closed;

    fn cnf(n: usize, clauses: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn all_patterns() -> CnfFormula {
        let clauses = (0..8)
            .map(|mask: i32| {
                (1..=3)
                    .map(|v| if mask >> (v - 1) & 1 == 1 { -v } else { v })
                    .collect()
            })
            .collect();
        CnfFormula::new(3, clauses).unwrap()
    }

    #[test]
    fn formula_validation() {
        assert!(CnfFormula::new(2, vec![vec![1, 3]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![0]]).is_err());
        assert!(CnfFormula::new(2, vec![vec![]]).is_err());
        assert!(CnfFormula::new(4, vec![vec![1, 2, 3, 4]]).is_err());
        assert!(CnfFormula::new(0, vec![]).is_ok());
    }

    #[test]
    fn dimacs_round_trip_and_errors() {
        let text = "c comment\np cnf 3 2\n1 -2 0\n3\n0\n";
        let c = parse_dimacs(text).unwrap();
        assert_eq!(c.clauses(), &[vec![1, -2], vec![3]]);
        assert_eq!(parse_dimacs(&render_dimacs(&c)).unwrap(), c);
        for bad in [
            "1 2 0\n",
            "p cnf 2 2\n1 0\n",
            "p cnf 2 1\n1 2\n",
            "p cnf 1 1\n2 0\n",
            "p dnf 1 1\n",
        ] {
            assert!(parse_dimacs(bad).is_err(), "{bad:?}");
        }
        assert!(matches!(
            parse_dimacs("p cnf 1 1\nx 0\n"),
            Err(Error::Parse(ParseError::Dimacs { line: 2, .. }))
        ));
    }

    #[test]
    fn brute_force_sat() {
        assert!(!sat_bruteforce(&cnf(1, &[&[1], &[-1]])).unwrap());
        assert!(sat_bruteforce(&cnf(3, &[&[1, 2, 3]])).unwrap());
        assert!(!sat_bruteforce(&all_patterns()).unwrap());
        assert!(sat_bruteforce(&cnf(0, &[])).unwrap());
        assert!(sat_bruteforce(&CnfFormula::new(21, vec![]).unwrap()).is_err());
    }

    #[test]
    fn naf_reduction_examples() {
        let f = reduce_naf(&cnf(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(f.len(), 9);
        assert_eq!(f.labels()[..4], ["x", "y", "C1", "x1"]);
        assert_eq!(f.label(4), "nx1");
        assert!(f.attacks_pair(1, 0));
        assert!(!oracle::is_naive_bijective(&f, OracleLimit::default()).unwrap());

        let g = reduce_naf(&all_patterns()).unwrap();
        assert_eq!(g.len(), 2 + 8 + 6);
        assert!(oracle::is_naive_bijective(&g, OracleLimit::default()).unwrap());
        assert!(reduce_naf(&cnf(2, &[])).is_err());
    }

    #[test]
    fn acaf_reduction_examples() {
        let f = reduce_acaf(&cnf(1, &[&[1]])).unwrap();
        assert_eq!(f.len(), 7);
        assert!(
            !is_admissible_closed(
                &reduce_acaf(&cnf(3, &[&[1, 2, 3]])).unwrap(),
                OracleLimit::default()
            )
            .unwrap()
            .closed
        );
        assert!(
            is_admissible_closed(
                &reduce_acaf(&all_patterns()).unwrap(),
                OracleLimit::default()
            )
            .unwrap()
            .closed
        );
        assert!(reduce_acaf(&cnf(1, &[])).is_err());
    }

    #[test]
    fn random_frameworks() {
        assert_eq!(random_af(3, 0.0, 7, false).unwrap().attack_count(), 0);
        assert_eq!(random_af(3, 1.0, 7, false).unwrap().attack_count(), 9);
        assert_eq!(random_af(3, 1.0, 7, true).unwrap().attack_count(), 9);
        assert_eq!(
            random_af(8, 0.4, 11, false).unwrap(),
            random_af(8, 0.4, 11, false).unwrap()
        );
        assert_ne!(
            random_af(8, 0.4, 11, false).unwrap(),
            random_af(8, 0.4, 12, false).unwrap()
        );
        let s = random_af(9, 0.3, 5, true).unwrap();
        assert!(s.attacks().all(|(a, b)| s.attacks_pair(b, a)));
        assert!(random_af(3, 1.5, 0, false).is_err());
    }

    #[test]
    fn splitmix_reference_stream() {
        // First outputs for seed 0 of the reference SplitMix64.
        use rand::RngCore;
        let mut rng = SplitMix64::seed_from_u64(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn capped_frameworks_respect_cap() {
        for seed in 0..20 {
            let f = random_af_capped(30, 0.5, 3, seed).unwrap();
            assert!(f.max_in_degree() <= 3);
        }
        assert_eq!(random_af_capped(10, 1.0, 2, 3).unwrap().attack_count(), 20);
    }

    #[test]
    fn random_cnf_is_valid() {
        for seed in 0..50 {
            let c = random_cnf(4, 4, seed).unwrap();
            assert_eq!(c.clauses().len(), 4);
            for clause in c.clauses() {
                let mut vars: Vec<u32> = clause.iter().map(|l| l.unsigned_abs()).collect();
                vars.dedup();
                assert_eq!(vars.len(), clause.len());
            }
        }
    }

    #[test]
    fn triangle_stacks() {
        assert_eq!(enum_mis(&triangle_stack(3)).count(), 27);
        let f = triangle_stack_framework(2);
        assert_eq!(
            enum_family(&f, Semantics::Naive, OracleLimit::default())
                .unwrap()
                .len(),
            9
        );
    }
}
