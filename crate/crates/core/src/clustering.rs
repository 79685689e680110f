//! Capacity-constrained disk cover of the ground nodes.
//!
//! Greedy max-coverage: each round considers, for every still-uncovered
//! node, the node's own position and the centroid of its within-radius
//! neighbourhood, and places the candidate disk that serves the most
//! uncovered nodes. A disk serves at most `w` nodes (one wavelength each),
//! so gain is counted capped at `w`; among equal gains the disk stranding
//! the fewest over-capacity nodes wins, then the lowest candidate node id,
//! with a node's own position preferred over its centroid. Membership is
//! truncated to the `w` nearest when over capacity, covered nodes are
//! marked, and the rounds repeat until everything is covered. The cover is
//! deterministic.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::scenario::Scenario;

// Greedy selection record: served gain, raw coverage, generator node id,
// candidate kind (0 = node position, 1 = centroid) and the centre point.
type Candidate = (usize, usize, u32, u8, (f64, f64));

/// One serving zone: disk centre, members and the serving radius.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Cluster {
    pub center: (f64, f64),
    /// Member node ids, ascending.
    pub member_ids: Vec<u32>,
    pub radius: f64,
}

// Uniform grid over node positions with cells of side `radius`; any point
// within `radius` of a query point lies in the 3x3 cell block around it.
struct GridIndex {
    cell: f64,
    cells: BTreeMap<(i64, i64), Vec<u32>>,
}

impl GridIndex {
    fn build(points: &[(f64, f64)], alive: &[bool], cell: f64) -> Self {
        let mut cells: BTreeMap<(i64, i64), Vec<u32>> = BTreeMap::new();
        for (id, p) in points.iter().enumerate() {
            if alive[id] {
                cells
                    .entry(Self::key(cell, *p))
                    .or_default()
                    .push(id as u32);
            }
        }
        GridIndex { cell, cells }
    }

    fn key(cell: f64, p: (f64, f64)) -> (i64, i64) {
        ((p.0 / cell).floor() as i64, (p.1 / cell).floor() as i64)
    }

    /// Ids within `radius` of `p`, ascending.
    fn within(&self, points: &[(f64, f64)], p: (f64, f64), radius: f64) -> Vec<u32> {
        let (cx, cy) = Self::key(self.cell, p);
        let mut hits = Vec::new();
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = self.cells.get(&(cx + dx, cy + dy)) {
                    for &id in ids {
                        let q = points[id as usize];
                        if (q.0 - p.0).hypot(q.1 - p.1) <= radius {
                            hits.push(id);
                        }
                    }
                }
            }
        }
        hits.sort_unstable();
        hits
    }
}

/// Cover all scenario nodes with disks of the given radius, at most `w`
/// members per disk. Always terminates: every round covers at least the
/// candidate node itself.
pub fn cluster_nodes(scenario: &Scenario, radius: f64, w: u32) -> Vec<Cluster> {
    assert!(radius > 0.0, "clustering radius must be positive");
    assert!(w >= 1, "cluster capacity must be at least 1");

    let points: Vec<(f64, f64)> = scenario.nodes.iter().map(|n| (n.x, n.y)).collect();
    let mut uncovered = vec![true; points.len()];
    let mut remaining = points.len();
    let mut clusters = Vec::new();

    while remaining > 0 {
        let index = GridIndex::build(&points, &uncovered, radius);

        // best candidate: (served gain desc, raw coverage asc, node id asc,
        // kind asc) with kind 0 = own position, 1 = centroid
        let mut best: Option<Candidate> = None;
        let mut consider = |raw: usize, id: u32, kind: u8, center: (f64, f64)| {
            let gain = raw.min(w as usize);
            let better = match best {
                None => true,
                Some((bg, braw, bid, bkind, _)) => {
                    (std::cmp::Reverse(gain), raw, id, kind)
                        < (std::cmp::Reverse(bg), braw, bid, bkind)
                }
            };
            if better {
                best = Some((gain, raw, id, kind, center));
            }
        };

        for id in 0..points.len() as u32 {
            if !uncovered[id as usize] {
                continue;
            }
            let p = points[id as usize];
            let neighbourhood = index.within(&points, p, radius);
            consider(neighbourhood.len(), id, 0, p);

            // centroid of the neighbourhood, summed in id order
            let inv = 1.0 / neighbourhood.len() as f64;
            let centroid = neighbourhood.iter().fold((0.0, 0.0), |acc, &n| {
                let q = points[n as usize];
                (acc.0 + q.0, acc.1 + q.1)
            });
            let centroid = (centroid.0 * inv, centroid.1 * inv);
            let covered = index.within(&points, centroid, radius);
            consider(covered.len(), id, 1, centroid);
        }

        let (_, _, _, _, center) = best.expect("uncovered nodes remain, so a candidate exists");
        let mut members = index.within(&points, center, radius);
        if members.len() > w as usize {
            // keep the w nearest; break distance ties by node id
            members.sort_by(|&a, &b| {
                let pa = points[a as usize];
                let pb = points[b as usize];
                let da = (pa.0 - center.0).hypot(pa.1 - center.1);
                let db = (pb.0 - center.0).hypot(pb.1 - center.1);
                da.partial_cmp(&db).unwrap().then(a.cmp(&b))
            });
            members.truncate(w as usize);
            members.sort_unstable();
        }
        for &id in &members {
            uncovered[id as usize] = false;
        }
        remaining -= members.len();
        clusters.push(Cluster {
            center,
            member_ids: members,
            radius,
        });
    }

    clusters
}
