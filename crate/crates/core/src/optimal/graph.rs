//! The distance-2 graph over an involution class and a deterministic
//! backtracking search for Hamilton paths and cycles in it.

use std::time::{Duration, Instant};

use crate::code::CodeList;
use crate::counting::enumerate_within;
use crate::error::Result;
use crate::perm::{GroupType, SignedPerm};

/// Graph over all involutions of one type and rank. In the plain variant
/// two vertices are adjacent iff their Hamming distance is 2; the
/// restricted variant keeps only the moves the distance-2 codes use:
/// sign changes within one unsigned involution, and sign-free
/// transpositions.
pub struct Distance2Graph {
    group: GroupType,
    rank: usize,
    vertices: Vec<SignedPerm>,
    adj: Vec<Vec<usize>>,
}

impl Distance2Graph {
    pub fn group(&self) -> GroupType {
        self.group
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[SignedPerm] {
        &self.vertices
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn index_of(&self, w: &SignedPerm) -> Option<usize> {
        self.vertices.binary_search(w).ok()
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }
}

/// Distance-2 moves between involutions `u != v` at Hamming distance 2:
/// either the unsigned words agree (two sign changes) or the two moved
/// values are exchanged with their signs carried (sign-free transposition).
pub fn is_restricted_move(u: &SignedPerm, v: &SignedPerm) -> bool {
    let diff: Vec<usize> = (0..u.rank())
        .filter(|&i| u.word()[i] != v.word()[i])
        .collect();
    if diff.len() != 2 {
        return false;
    }
    let (a, b) = (diff[0], diff[1]);
    let sign_move = u.word()[a].abs() == v.word()[a].abs() && u.word()[b].abs() == v.word()[b].abs();
    let swap_move = u.word()[a] == v.word()[b] && u.word()[b] == v.word()[a];
    sign_move || swap_move
}

fn build(group: GroupType, n: usize, restricted: bool) -> Result<Distance2Graph> {
    let vertices = enumerate_within(group, n, n)?.entries().to_vec();
    let m = vertices.len();
    let mut adj = vec![Vec::new(); m];
    for i in 0..m {
        for j in i + 1..m {
            let ok = if restricted {
                is_restricted_move(&vertices[i], &vertices[j])
            } else {
                vertices[i].hamming(&vertices[j]) == 2
            };
            if ok {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    Ok(Distance2Graph {
        group,
        rank: n,
        vertices,
        adj,
    })
}

/// Graph with edges exactly at Hamming distance 2.
pub fn distance2_graph(group: GroupType, n: usize) -> Result<Distance2Graph> {
    build(group, n, false)
}

/// Graph restricted to sign moves and sign-free transpositions.
pub fn restricted_distance2_graph(group: GroupType, n: usize) -> Result<Distance2Graph> {
    build(group, n, true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamiltonTarget {
    Cycle,
    Path,
}

/// Outcome of a Hamilton search. `Exhausted` certifies that the full
/// search tree was explored; `TimedOut` carries the exceeded budget.
#[derive(Debug)]
pub enum SearchOutcome {
    Found {
        code: CodeList,
        nodes_expanded: u64,
        elapsed: Duration,
    },
    Exhausted {
        nodes_expanded: u64,
        elapsed: Duration,
    },
    TimedOut {
        budget: Duration,
        nodes_expanded: u64,
    },
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&CodeList> {
        match self {
            SearchOutcome::Found { code, .. } => Some(code),
            _ => None,
        }
    }

    pub fn nodes_expanded(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes_expanded, .. }
            | SearchOutcome::Exhausted { nodes_expanded, .. }
            | SearchOutcome::TimedOut { nodes_expanded, .. } => *nodes_expanded,
        }
    }
}

struct Searcher<'g> {
    g: &'g Distance2Graph,
    target: HamiltonTarget,
    deadline: Option<Instant>,
    budget: Option<Duration>,
    nodes: u64,
    visited: Vec<bool>,
    path: Vec<usize>,
    timed_out: bool,
}

impl<'g> Searcher<'g> {
    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        if self.nodes % 4096 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    // Depth-first extension with least-remaining-degree neighbor ordering
    // and index tie-breaking; returns true when a full tour was completed.
    fn extend(&mut self, start: usize) -> bool {
        let v = *self.path.last().expect("path never empty");
        if self.path.len() == self.g.vertex_count() {
            return match self.target {
                HamiltonTarget::Cycle => self.g.is_adjacent(v, start),
                HamiltonTarget::Path => true,
            };
        }
        self.nodes += 1;
        if self.out_of_time() {
            return false;
        }
        // candidates sorted by number of unvisited continuations
        let mut candidates: Vec<(usize, usize)> = self
            .g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| !self.visited[u])
            .map(|u| {
                let free = self
                    .g
                    .neighbors(u)
                    .iter()
                    .filter(|&&w| !self.visited[w])
                    .count();
                (free, u)
            })
            .collect();
        candidates.sort_unstable();
        for (_, u) in candidates {
            self.visited[u] = true;
            self.path.push(u);
            if self.extend(start) {
                return true;
            }
            self.path.pop();
            self.visited[u] = false;
            if self.timed_out {
                return false;
            }
        }
        false
    }
}

/// Deterministic backtracking Hamilton search.
///
/// Cycle searches are rooted at vertex 0; path searches try every start
/// vertex in index order. With no budget the search is exhaustive, so
/// `Exhausted` is a proof of non-existence.
pub fn find_hamilton(
    g: &Distance2Graph,
    target: HamiltonTarget,
    budget: Option<Duration>,
) -> SearchOutcome {
    let t0 = Instant::now();
    let m = g.vertex_count();
    let mut s = Searcher {
        g,
        target,
        deadline: budget.map(|b| t0 + b),
        budget,
        nodes: 0,
        visited: vec![false; m],
        path: Vec::with_capacity(m),
        timed_out: false,
    };
    if m == 0 {
        return SearchOutcome::Exhausted {
            nodes_expanded: 0,
            elapsed: t0.elapsed(),
        };
    }
    let starts: Vec<usize> = match target {
        HamiltonTarget::Cycle => vec![0],
        HamiltonTarget::Path => (0..m).collect(),
    };
    for start in starts {
        s.visited.iter_mut().for_each(|b| *b = false);
        s.path.clear();
        s.visited[start] = true;
        s.path.push(start);
        if m == 1 || s.extend(start) {
            let entries: Vec<SignedPerm> =
                s.path.iter().map(|&i| g.vertices[i].clone()).collect();
            let code = CodeList::from_parts(g.group, g.rank, entries);
            return SearchOutcome::Found {
                code,
                nodes_expanded: s.nodes,
                elapsed: t0.elapsed(),
            };
        }
        if s.timed_out {
            return SearchOutcome::TimedOut {
                budget: s.budget.unwrap_or_default(),
                nodes_expanded: s.nodes,
            };
        }
    }
    SearchOutcome::Exhausted {
        nodes_expanded: s.nodes,
        elapsed: t0.elapsed(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn d2_vertices_and_star() {
        let g = distance2_graph(GroupType::D, 3).unwrap();
        assert_eq!(g.vertex_count(), 10);
        let g2 = distance2_graph(GroupType::D, 2).unwrap();
        assert_eq!(g2.vertex_count(), 4);
        // rank 2: every pair of distinct involutions is at distance 2
        for v in 0..4 {
            assert_eq!(g2.degree(v), 3);
        }
    }

    #[test]
    fn identity_not_adjacent_to_distance_three() {
        let g = distance2_graph(GroupType::D, 3).unwrap();
        let id = g
            .index_of(&SignedPerm::from_word(vec![1, 2, 3]).unwrap())
            .unwrap();
        let far = g
            .index_of(&SignedPerm::from_word(vec![-3, 2, -1]).unwrap())
            .unwrap();
        let near = g
            .index_of(&SignedPerm::from_word(vec![2, 1, 3]).unwrap())
            .unwrap();
        assert!(g.is_adjacent(id, near));
        assert!(!g.is_adjacent(id, far));
    }

    #[test]
    fn rank2_cycle_found() {
        let g = distance2_graph(GroupType::D, 2).unwrap();
        match find_hamilton(&g, HamiltonTarget::Cycle, None) {
            SearchOutcome::Found { code, .. } => assert_eq!(code.len(), 4),
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn rank3_no_cycle_but_path() {
        let g = distance2_graph(GroupType::D, 3).unwrap();
        assert!(matches!(
            find_hamilton(&g, HamiltonTarget::Cycle, None),
            SearchOutcome::Exhausted { .. }
        ));
        match find_hamilton(&g, HamiltonTarget::Path, None) {
            SearchOutcome::Found { code, .. } => {
                assert_eq!(code.len(), 10);
                for pair in code.entries().windows(2) {
                    assert_eq!(pair[0].hamming(&pair[1]), 2);
                }
            }
            other => panic!("expected Found, got {other:?}"),
        }
    }

    #[test]
    fn search_is_deterministic() {
        let g = restricted_distance2_graph(GroupType::D, 4).unwrap();
        let a = find_hamilton(&g, HamiltonTarget::Cycle, None);
        let b = find_hamilton(&g, HamiltonTarget::Cycle, None);
        match (a, b) {
            (SearchOutcome::Found { code: ca, .. }, SearchOutcome::Found { code: cb, .. }) => {
                assert_eq!(ca, cb);
            }
            other => panic!("expected two Found outcomes, got {other:?}"),
        }
    }

    #[test]
    fn restricted_moves() {
        let u = SignedPerm::from_word(vec![1, 2]).unwrap();
        assert!(is_restricted_move(
            &u,
            &SignedPerm::from_word(vec![-1, -2]).unwrap()
        ));
        assert!(is_restricted_move(
            &u,
            &SignedPerm::from_word(vec![2, 1]).unwrap()
        ));
        // barred transposition is distance 2 but not a code move
        assert!(!is_restricted_move(
            &u,
            &SignedPerm::from_word(vec![-2, -1]).unwrap()
        ));
    }
}
