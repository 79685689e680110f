//! Lightpath aggregation and incremental inter-platform topology
//! construction.
//!
//! Traffic between nodes of different serving zones is bundled into
//! wavelength-granularity lightpaths between the zones' platforms. The
//! topology starts empty; bundles are routed one by one over a candidate
//! full mesh of links not longer than the inter-platform reach, and every
//! new link a route uses joins the topology. Links already in the topology
//! are almost free to reuse, so routes strongly prefer them and the final
//! link count stays small.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::clustering::Cluster;
use crate::error::{PlanError, Result};
use crate::scenario::Scenario;

/// A platform hovering over its serving zone.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Hap {
    pub id: u32,
    pub x: f64,
    pub y: f64,
    pub elevation: f64,
}

/// An inter-platform link and the number of lightpaths riding it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Link {
    pub a: u32,
    pub b: u32,
    pub length: f64,
    pub wavelengths_used: u32,
}

/// A routed lightpath bundle.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lightpath {
    pub src: u32,
    pub dst: u32,
    /// Platform ids along the route, endpoints included.
    pub route: Vec<u32>,
    /// Number of parallel lightpaths in the bundle.
    pub count: u32,
}

/// The designed inter-platform network.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HapTopology {
    pub haps: Vec<Hap>,
    pub links: Vec<Link>,
    pub lightpaths: Vec<Lightpath>,
}

/// Traffic between one ordered pair of platforms.
#[derive(Debug, Clone, PartialEq)]
pub struct AggregatedDemand {
    pub src: u32,
    pub dst: u32,
    pub flow_gbps: f64,
    /// Lightpaths needed to carry the flow.
    pub lightpaths: u32,
}

// Existing topology links cost next to nothing to reuse; any weight below
// 1/(longest possible hop count) yields the fewest-new-links behaviour.
const REUSE_WEIGHT: f64 = 1e-3;
const NEW_LINK_WEIGHT: f64 = 1.0;

/// Bundle inter-zone traffic into per-platform-pair lightpath demands.
/// Intra-zone traffic never touches the inter-platform network.
pub fn aggregate_demands(
    scenario: &Scenario,
    clusters: &[Cluster],
    wavelength_capacity: f64,
) -> Vec<AggregatedDemand> {
    let mut zone_of = vec![u32::MAX; scenario.nodes.len()];
    for (zone, c) in clusters.iter().enumerate() {
        for &id in &c.member_ids {
            zone_of[id as usize] = zone as u32;
        }
    }
    let mut flows: BTreeMap<(u32, u32), f64> = BTreeMap::new();
    for d in &scenario.demands {
        let (a, b) = (zone_of[d.src as usize], zone_of[d.dst as usize]);
        debug_assert!(
            a != u32::MAX && b != u32::MAX,
            "demand endpoint not clustered"
        );
        if a != b {
            *flows.entry((a, b)).or_insert(0.0) += d.gbps;
        }
    }
    flows
        .into_iter()
        .map(|((src, dst), flow_gbps)| AggregatedDemand {
            src,
            dst,
            flow_gbps,
            lightpaths: (flow_gbps / wavelength_capacity).ceil() as u32,
        })
        .collect()
}

/// Platforms for a set of serving zones, hovering over the zone centres.
pub fn haps_over_clusters(clusters: &[Cluster], elevation: f64) -> Vec<Hap> {
    clusters
        .iter()
        .enumerate()
        .map(|(id, c)| Hap {
            id: id as u32,
            x: c.center.0,
            y: c.center.1,
            elevation,
        })
        .collect()
}

// Candidate mesh with per-edge state packed into flat arrays so the
// routing inner loop stays cheap.
struct RouteState {
    /// Candidate neighbours per platform, ascending id: (neighbour, edge).
    adjacency: Vec<Vec<(u32, u32)>>,
    /// Endpoints of every candidate edge, a < b.
    endpoints: Vec<(u32, u32)>,
    lengths: Vec<f64>,
    /// Wavelengths riding each edge; `u32::MAX` marks a not-yet-established
    /// candidate.
    used: Vec<u32>,
    degree: Vec<u32>,
    /// Direct candidate edge per ordered platform pair, if within reach.
    direct: BTreeMap<(u32, u32), u32>,
    /// Edge ban marks for the current demand (stamp equality).
    ban_stamp: Vec<u64>,
    stamp: u64,
}

const NOT_ESTABLISHED: u32 = u32::MAX;

impl RouteState {
    fn build(haps: &[Hap], l_hh: f64) -> Self {
        let mut adjacency: Vec<Vec<(u32, u32)>> = vec![Vec::new(); haps.len()];
        let mut endpoints = Vec::new();
        let mut lengths = Vec::new();
        let mut direct = BTreeMap::new();
        for a in 0..haps.len() {
            for b in (a + 1)..haps.len() {
                let length = (haps[a].x - haps[b].x).hypot(haps[a].y - haps[b].y);
                if length <= l_hh {
                    let edge = endpoints.len() as u32;
                    endpoints.push((a as u32, b as u32));
                    lengths.push(length);
                    adjacency[a].push((b as u32, edge));
                    adjacency[b].push((a as u32, edge));
                    direct.insert((a as u32, b as u32), edge);
                }
            }
        }
        let n_edges = endpoints.len();
        RouteState {
            adjacency,
            endpoints,
            lengths,
            used: vec![NOT_ESTABLISHED; n_edges],
            degree: vec![0; haps.len()],
            direct,
            ban_stamp: vec![0; n_edges],
            stamp: 0,
        }
    }

    fn direct_edge(&self, a: u32, b: u32) -> Option<u32> {
        self.direct.get(&(a.min(b), a.max(b))).copied()
    }

    /// Dijkstra over the candidate mesh. Established edges with spare
    /// wavelengths cost `REUSE_WEIGHT`; new edges cost `NEW_LINK_WEIGHT`
    /// and need degree headroom at both ends. Returns the edge path.
    fn shortest_path(
        &self,
        src: u32,
        dst: u32,
        need: u32,
        w_cap: u32,
        v_cap: u32,
    ) -> Option<Vec<u32>> {
        let n = self.adjacency.len();
        let mut dist = vec![f64::INFINITY; n];
        let mut prev_edge = vec![u32::MAX; n];
        let mut done = vec![false; n];
        // distances enter the heap as raw bit patterns; all are
        // non-negative finite, so the ordering is monotone
        let mut heap: std::collections::BinaryHeap<std::cmp::Reverse<(u64, u32)>> =
            std::collections::BinaryHeap::new();
        dist[src as usize] = 0.0;
        heap.push(std::cmp::Reverse((0, src)));
        while let Some(std::cmp::Reverse((_, u))) = heap.pop() {
            if done[u as usize] {
                continue;
            }
            done[u as usize] = true;
            if u == dst {
                break;
            }
            let du = dist[u as usize];
            for &(v, edge) in &self.adjacency[u as usize] {
                if done[v as usize] || self.ban_stamp[edge as usize] == self.stamp {
                    continue;
                }
                let used = self.used[edge as usize];
                let weight = if used == NOT_ESTABLISHED {
                    if self.degree[u as usize] >= v_cap || self.degree[v as usize] >= v_cap {
                        continue; // no degree headroom for a new link
                    }
                    NEW_LINK_WEIGHT
                } else {
                    if used + need > w_cap {
                        continue; // no spare wavelengths
                    }
                    REUSE_WEIGHT
                };
                let cand = du + weight;
                if cand < dist[v as usize] {
                    dist[v as usize] = cand;
                    prev_edge[v as usize] = edge;
                    heap.push(std::cmp::Reverse((cand.to_bits(), v)));
                }
            }
        }
        if !dist[dst as usize].is_finite() {
            return None;
        }
        let mut edges = Vec::new();
        let mut at = dst;
        while at != src {
            let edge = prev_edge[at as usize];
            edges.push(edge);
            let (a, b) = self.endpoints[edge as usize];
            at = if at == a { b } else { a };
        }
        edges.reverse();
        Some(edges)
    }

    fn commit(&mut self, edges: &[u32], count: u32) {
        for &edge in edges {
            let slot = &mut self.used[edge as usize];
            if *slot == NOT_ESTABLISHED {
                let (a, b) = self.endpoints[edge as usize];
                self.degree[a as usize] += 1;
                self.degree[b as usize] += 1;
                *slot = count;
            } else {
                *slot += count;
            }
        }
    }

    fn route_of(&self, src: u32, edges: &[u32]) -> Vec<u32> {
        let mut route = vec![src];
        let mut at = src;
        for &edge in edges {
            let (a, b) = self.endpoints[edge as usize];
            at = if at == a { b } else { a };
            route.push(at);
        }
        route
    }
}

/// Route every lightpath bundle, growing the topology as routes claim new
/// links. Bundles are processed largest first (ties by platform-id pair).
/// Fails with the first unroutable bundle, which feeds the outer loop that
/// raises the per-platform link budget.
pub fn build_topology(
    haps: &[Hap],
    demands: &[AggregatedDemand],
    l_hh: f64,
    v_cap: u32,
    w_cap: u32,
) -> Result<HapTopology> {
    let mut order: Vec<&AggregatedDemand> = demands.iter().collect();
    order.sort_by(|a, b| {
        b.lightpaths
            .cmp(&a.lightpaths)
            .then(a.src.cmp(&b.src))
            .then(a.dst.cmp(&b.dst))
    });

    let mut state = RouteState::build(haps, l_hh);
    let mut lightpaths = Vec::with_capacity(order.len());

    for demand in order {
        debug_assert!(
            demand.lightpaths <= w_cap,
            "bundle exceeds one link's capacity"
        );

        // An established direct link with spare wavelengths is always the
        // least-cost route; skip the search.
        let direct = state.direct_edge(demand.src, demand.dst);
        let quick = direct.filter(|&e| {
            let used = state.used[e as usize];
            used != NOT_ESTABLISHED && used + demand.lightpaths <= w_cap
        });

        let edges = match quick {
            Some(e) => vec![e],
            None => {
                state.stamp += 1;
                loop {
                    let Some(edges) = state.shortest_path(
                        demand.src,
                        demand.dst,
                        demand.lightpaths,
                        w_cap,
                        v_cap,
                    ) else {
                        return Err(PlanError::RoutingFailure {
                            src: demand.src,
                            dst: demand.dst,
                        });
                    };
                    // A path may claim several new links; re-check degrees
                    // with all of them counted and retry without the first
                    // offender.
                    let mut extra = vec![0u32; haps.len()];
                    for &edge in &edges {
                        if state.used[edge as usize] == NOT_ESTABLISHED {
                            let (a, b) = state.endpoints[edge as usize];
                            extra[a as usize] += 1;
                            extra[b as usize] += 1;
                        }
                    }
                    let offender = edges.iter().copied().find(|&edge| {
                        if state.used[edge as usize] != NOT_ESTABLISHED {
                            return false;
                        }
                        let (a, b) = state.endpoints[edge as usize];
                        state.degree[a as usize] + extra[a as usize] > v_cap
                            || state.degree[b as usize] + extra[b as usize] > v_cap
                    });
                    match offender {
                        None => break edges,
                        Some(edge) => state.ban_stamp[edge as usize] = state.stamp,
                    }
                }
            }
        };

        let route = state.route_of(demand.src, &edges);
        state.commit(&edges, demand.lightpaths);
        lightpaths.push(Lightpath {
            src: demand.src,
            dst: demand.dst,
            route,
            count: demand.lightpaths,
        });
    }

    let links = (0..state.endpoints.len())
        .filter(|&e| state.used[e] != NOT_ESTABLISHED)
        .map(|e| {
            let (a, b) = state.endpoints[e];
            Link {
                a,
                b,
                length: state.lengths[e],
                wavelengths_used: state.used[e],
            }
        })
        .collect();

    Ok(HapTopology {
        haps: haps.to_vec(),
        links,
        lightpaths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clustering::Cluster;
    use crate::scenario::{Demand, GroundNode, Scenario};

    fn hap(id: u32, x: f64, y: f64) -> Hap {
        Hap {
            id,
            x,
            y,
            elevation: 20_000.0,
        }
    }

    fn bundle(src: u32, dst: u32, lightpaths: u32) -> AggregatedDemand {
        AggregatedDemand {
            src,
            dst,
            flow_gbps: lightpaths as f64,
            lightpaths,
        }
    }

    #[test]
    fn aggregation_bundles_and_ceils() {
        let scenario = Scenario {
            nodes: (0..4).map(|id| GroundNode { id, x: 0.0, y: 0.0 }).collect(),
            demands: vec![
                Demand {
                    src: 0,
                    dst: 2,
                    gbps: 1.7,
                },
                Demand {
                    src: 1,
                    dst: 3,
                    gbps: 0.8,
                },
                Demand {
                    src: 0,
                    dst: 1,
                    gbps: 0.9,
                }, // intra-zone
            ],
            area_side: 1e5,
            seed: 0,
        };
        let clusters = vec![
            Cluster {
                center: (0.0, 0.0),
                member_ids: vec![0, 1],
                radius: 1.0,
            },
            Cluster {
                center: (0.0, 0.0),
                member_ids: vec![2, 3],
                radius: 1.0,
            },
        ];
        let agg = aggregate_demands(&scenario, &clusters, 1.0);
        assert_eq!(agg.len(), 1);
        assert_eq!((agg[0].src, agg[0].dst), (0, 1));
        assert!((agg[0].flow_gbps - 2.5).abs() < 1e-12);
        assert_eq!(agg[0].lightpaths, 3);
    }

    #[test]
    fn aggregation_of_intra_zone_traffic_is_empty() {
        let scenario = Scenario {
            nodes: (0..2).map(|id| GroundNode { id, x: 0.0, y: 0.0 }).collect(),
            demands: vec![Demand {
                src: 0,
                dst: 1,
                gbps: 0.5,
            }],
            area_side: 1e5,
            seed: 0,
        };
        let clusters = vec![Cluster {
            center: (0.0, 0.0),
            member_ids: vec![0, 1],
            radius: 1.0,
        }];
        assert!(aggregate_demands(&scenario, &clusters, 1.0).is_empty());
    }

    #[test]
    fn direct_link_for_reachable_pair() {
        let haps = vec![hap(0, 0.0, 0.0), hap(1, 50_000.0, 0.0)];
        let topo = build_topology(&haps, &[bundle(0, 1, 1)], 88_000.0, 10, 40).unwrap();
        assert_eq!(topo.links.len(), 1);
        assert_eq!(topo.lightpaths[0].route, vec![0, 1]);
    }

    #[test]
    fn relay_when_pair_is_out_of_reach() {
        // 100 km apart with a relay half way: two hops.
        let haps = vec![
            hap(0, 0.0, 0.0),
            hap(1, 100_000.0, 0.0),
            hap(2, 50_000.0, 0.0),
        ];
        let topo = build_topology(&haps, &[bundle(0, 1, 1)], 88_000.0, 10, 40).unwrap();
        assert_eq!(topo.lightpaths[0].route, vec![0, 2, 1]);
        assert_eq!(topo.links.len(), 2);
    }

    #[test]
    fn established_links_are_reused() {
        // Second bundle between the same pair rides the same link.
        let haps = vec![
            hap(0, 0.0, 0.0),
            hap(1, 40_000.0, 0.0),
            hap(2, 80_000.0, 0.0),
        ];
        let topo =
            build_topology(&haps, &[bundle(0, 1, 2), bundle(1, 0, 3)], 88_000.0, 10, 40).unwrap();
        assert_eq!(topo.links.len(), 1);
        assert_eq!(topo.links[0].wavelengths_used, 5);
    }

    #[test]
    fn wavelength_exhaustion_forces_another_path() {
        // Tight capacity: the direct link fills up, the second bundle must
        // detour through the relay.
        let haps = vec![
            hap(0, 0.0, 0.0),
            hap(1, 50_000.0, 0.0),
            hap(2, 25_000.0, 30_000.0),
        ];
        let topo =
            build_topology(&haps, &[bundle(0, 1, 3), bundle(1, 0, 2)], 88_000.0, 10, 4).unwrap();
        assert_eq!(topo.lightpaths[0].route, vec![0, 1]);
        assert_eq!(topo.lightpaths[1].route, vec![1, 2, 0]);
        for l in &topo.links {
            assert!(l.wavelengths_used <= 4);
        }
    }

    #[test]
    fn degree_cap_fails_routing() {
        // A star around platform 0 with degree cap 1: the second spoke
        // cannot attach anywhere.
        let haps = vec![
            hap(0, 0.0, 0.0),
            hap(1, 50_000.0, 0.0),
            hap(2, 0.0, 50_000.0),
        ];
        let err = build_topology(&haps, &[bundle(0, 1, 1), bundle(0, 2, 1)], 60_000.0, 1, 40);
        assert!(matches!(err, Err(PlanError::RoutingFailure { .. })));
    }

    #[test]
    fn unreachable_pair_fails_routing() {
        let haps = vec![hap(0, 0.0, 0.0), hap(1, 95_000.0, 0.0)];
        let err = build_topology(&haps, &[bundle(0, 1, 1)], 88_000.0, 10, 40);
        assert!(matches!(
            err,
            Err(PlanError::RoutingFailure { src: 0, dst: 1 })
        ));
    }

    #[test]
    fn link_lengths_respect_the_reach() {
        let haps: Vec<Hap> = (0..6)
            .map(|i| hap(i, (i as f64) * 30_000.0, (i % 2) as f64 * 20_000.0))
            .collect();
        let demands: Vec<AggregatedDemand> = (1..6).map(|i| bundle(0, i, 1)).collect();
        let topo = build_topology(&haps, &demands, 88_000.0, 10, 40).unwrap();
        for l in &topo.links {
            assert!(l.length <= 88_000.0);
        }
        assert_eq!(topo.lightpaths.len(), 5);
    }
}
