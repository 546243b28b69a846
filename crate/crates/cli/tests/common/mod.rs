#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

/// A graph as a vertex count and an edge list; deliberately independent of
/// the library's graph type.
#[derive(Clone, Debug)]
pub struct Plain {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Plain {
    pub fn path(k: usize) -> Plain {
        Plain {
            n: k,
            edges: (1..k).map(|i| (i - 1, i)).collect(),
        }
    }

    pub fn cycle(k: usize) -> Plain {
        let mut p = Plain::path(k);
        p.edges.push((0, k - 1));
        p
    }

    pub fn join(&self, other: &Plain) -> Plain {
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(a, b)| (a + self.n, b + self.n)));
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, self.n + v));
            }
        }
        Plain {
            n: self.n + other.n,
            edges,
        }
    }

    pub fn complement(&self) -> Plain {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Plain { n: self.n, edges }
    }

    pub fn has(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// Edges with neither endpoint in `mask`, or `None` if `mask` is not
    /// independent.
    pub fn uncovered(&self, mask: u64) -> Option<usize> {
        let inside = |i: usize| mask >> i & 1 == 1;
        if self.edges.iter().any(|&(a, b)| inside(a) && inside(b)) {
            return None;
        }
        Some(
            self.edges
                .iter()
                .filter(|&&(a, b)| !inside(a) && !inside(b))
                .count(),
        )
    }

    pub fn brute_sparing(&self) -> usize {
        (0u64..1 << self.n)
            .filter_map(|m| self.uncovered(m))
            .min()
            .unwrap_or(0)
    }
}

pub fn mask_of(ids: &[usize]) -> u64 {
    ids.iter().fold(0, |m, &i| m | 1 << i)
}

/// Cycles C_m and C_n sharing the path 0-1-..-t, united. The first cycle
/// closes through t+1..m-1, the second through the next n-t-1 fresh ids.
pub fn overlapping_union(m: usize, n: usize, t: usize) -> Plain {
    let mut edges: Vec<(usize, usize)> = (1..=t).map(|i| (i - 1, i)).collect();
    let mut next = t + 1;
    for len in [m, n] {
        let mut prev = t;
        for _ in 0..len - t - 1 {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 0));
    }
    Plain { n: next, edges }
}

pub fn bin() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_iasi"))
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn iasi(args: &[&str], dir: &Path) -> Run {
    let out = Command::new(bin())
        .args(args)
        .current_dir(dir)
        .output()
        .expect("spawn iasi");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Golden tables and the command lines that produce them.
pub const GOLDENS: &[(&str, &[&str])] = &[
    (
        "wheel.csv",
        &["check", "WHEEL_SPARING", "--param", "n=3..10"],
    ),
    (
        "join_pp.csv",
        &[
            "check",
            "JOIN_PP_SPARING",
            "--param",
            "m=1..4",
            "--param",
            "n=2..5",
            "--convention",
            "both",
        ],
    ),
    (
        "join_cc.csv",
        &[
            "check",
            "JOIN_CC_SPARING",
            "--param",
            "m=3..5",
            "--param",
            "n=4..7",
        ],
    ),
    (
        "join_pc.csv",
        &[
            "check",
            "JOIN_PC_SPARING",
            "--param",
            "m=1..6",
            "--param",
            "n=3..6",
            "--convention",
            "both",
        ],
    ),
    (
        "union_overlap.csv",
        &[
            "check",
            "UNION_ADDITIVITY",
            "--param",
            "m=3..6",
            "--param",
            "n=3..6",
            "--param",
            "t=1..2",
        ],
    ),
    (
        "self_compl_count.csv",
        &["check", "SELF_COMPL_COUNT", "--param", "n=4..5"],
    ),
];

pub struct GoldenRow {
    pub theorem: String,
    pub params: Vec<(String, usize)>,
    pub convention: String,
    pub oracle: String,
    pub verdict: String,
    pub witness: String,
}

impl GoldenRow {
    pub fn get(&self, name: &str) -> usize {
        self.params.iter().find(|(k, _)| k == name).unwrap().1
    }
}

pub fn parse_golden(text: &str) -> Vec<GoldenRow> {
    text.lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            assert_eq!(f.len(), 7, "{line}");
            GoldenRow {
                theorem: f[0].into(),
                params: f[1]
                    .split(';')
                    .filter_map(|kv| {
                        let (k, v) = kv.split_once('=')?;
                        Some((k.to_string(), v.parse().ok()?))
                    })
                    .collect(),
                convention: f[2].into(),
                oracle: f[4].into(),
                verdict: f[5].into(),
                witness: f[6].into(),
            }
        })
        .collect()
}

fn path_size(row: &GoldenRow, k: usize) -> usize {
    match row.convention.as_str() {
        "length" => k + 1,
        _ => k,
    }
}

/// Recomputes a golden row's oracle cell by enumerating all 2^n patterns.
/// Returns `None` for rows without an instance.
pub fn rederive_oracle(row: &GoldenRow) -> Option<String> {
    if row.oracle == "-" {
        return None;
    }
    let value = match row.theorem.as_str() {
        "WHEEL_SPARING" => Plain::cycle(row.get("n"))
            .join(&Plain::path(1))
            .brute_sparing(),
        "JOIN_PP_SPARING" => {
            let (m, n) = (path_size(row, row.get("m")), path_size(row, row.get("n")));
            Plain::path(m).join(&Plain::path(n)).brute_sparing()
        }
        "JOIN_CC_SPARING" => Plain::cycle(row.get("m"))
            .join(&Plain::cycle(row.get("n")))
            .brute_sparing(),
        "JOIN_PC_SPARING" => {
            let m = path_size(row, row.get("m"));
            Plain::path(m)
                .join(&Plain::cycle(row.get("n")))
                .brute_sparing()
        }
        "UNION_ADDITIVITY" => {
            overlapping_union(row.get("m"), row.get("n"), row.get("t")).brute_sparing()
        }
        "SELF_COMPL_COUNT" => {
            let g = if row.get("n") == 4 {
                Plain::path(4)
            } else {
                Plain::cycle(5)
            };
            let inner = row
                .witness
                .split_once('{')
                .unwrap()
                .1
                .split_once('}')
                .unwrap()
                .0;
            let ids: Vec<usize> = inner
                .split_whitespace()
                .map(|x| x.parse().unwrap())
                .collect();
            let mask = mask_of(&ids);
            let l: usize = row.witness.rsplit_once("l=").unwrap().1.parse().unwrap();
            assert_eq!(g.uncovered(mask), Some(l), "l cell");
            g.complement().uncovered(mask).expect("concurrent pattern")
        }
        other => panic!("no re-derivation for {other}"),
    };
    Some(value.to_string())
}
