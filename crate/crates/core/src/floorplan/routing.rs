use std::cmp::Ordering;
use std::collections::BinaryHeap;

use thiserror::Error;

use super::{Floorplan, PlacementId, Rect, GEOM_EPS_UM};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum RoutingError {
    #[error("no placement {0} in the floorplan")]
    UnknownPlacement(PlacementId),
    #[error("no communication path from {from} to {to}")]
    NoRoute { from: PlacementId, to: PlacementId },
    #[error("no communication path from {from} to ({x_um}, {y_um})")]
    NoRouteToPoint { from: PlacementId, x_um: f64, y_um: f64 },
}

/// Two abutting placements and the midpoint of their shared edge.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Contact {
    pub a: PlacementId,
    pub b: PlacementId,
    pub point: (f64, f64),
}

impl Contact {
    fn other(&self, id: usize) -> usize {
        if self.a.0 == id {
            self.b.0
        } else {
            self.a.0
        }
    }
}

fn shared_edge(r: &Rect, s: &Rect) -> Option<(f64, f64)> {
    let near = |u: f64, v: f64| (u - v).abs() <= GEOM_EPS_UM;
    let (ylo, yhi) = (r.y0.max(s.y0), r.y1.min(s.y1));
    if yhi - ylo > GEOM_EPS_UM {
        let mid = (ylo + yhi) / 2.0;
        if near(r.x1, s.x0) {
            return Some((r.x1, mid));
        }
        if near(s.x1, r.x0) {
            return Some((r.x0, mid));
        }
    }
    let (xlo, xhi) = (r.x0.max(s.x0), r.x1.min(s.x1));
    if xhi - xlo > GEOM_EPS_UM {
        let mid = (xlo + xhi) / 2.0;
        if near(r.y1, s.y0) {
            return Some((mid, r.y1));
        }
        if near(s.y1, r.y0) {
            return Some((mid, r.y0));
        }
    }
    None
}

fn l1(p: (f64, f64), q: (f64, f64)) -> f64 {
    (p.0 - q.0).abs() + (p.1 - q.1).abs()
}

#[derive(PartialEq)]
struct Entry(f64, usize);

impl Eq for Entry {}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.0.total_cmp(&self.0).then_with(|| other.1.cmp(&self.1))
    }
}

/// Contact graph of a floorplan. A route leaves its source through a
/// contact, crosses any number of communication-only modules, and enters its
/// destination; its length is the Manhattan distance between successive
/// contact points.
#[derive(Debug, Clone)]
pub struct RoutingGraph {
    contacts: Vec<Contact>,
    by_placement: Vec<Vec<usize>>,
    routable: Vec<bool>,
}

impl RoutingGraph {
    pub fn new(plan: &Floorplan) -> Self {
        let rects: Vec<Rect> = plan.placements().iter().map(|p| p.rect()).collect();
        let n = rects.len();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|&i, &j| rects[i].x0.total_cmp(&rects[j].x0));
        let mut contacts = Vec::new();
        let mut by_placement = vec![Vec::new(); n];
        for (k, &i) in order.iter().enumerate() {
            for &j in &order[k + 1..] {
                if rects[j].x0 > rects[i].x1 + GEOM_EPS_UM {
                    break;
                }
                if let Some(point) = shared_edge(&rects[i], &rects[j]) {
                    let (a, b) = (i.min(j), i.max(j));
                    by_placement[a].push(contacts.len());
                    by_placement[b].push(contacts.len());
                    contacts.push(Contact {
                        a: PlacementId(a),
                        b: PlacementId(b),
                        point,
                    });
                }
            }
        }
        let routable = plan.placements().iter().map(|p| p.module.is_routable()).collect();
        Self {
            contacts,
            by_placement,
            routable,
        }
    }

    pub fn contacts(&self) -> &[Contact] {
        &self.contacts
    }

    /// Contacts touching `id`.
    pub fn contacts_of(&self, id: PlacementId) -> impl Iterator<Item = &Contact> {
        self.by_placement
            .get(id.0)
            .into_iter()
            .flatten()
            .map(|&c| &self.contacts[c])
    }

    fn check(&self, id: PlacementId) -> Result<(), RoutingError> {
        if id.0 < self.by_placement.len() {
            Ok(())
        } else {
            Err(RoutingError::UnknownPlacement(id))
        }
    }

    // State 2c + s: crossed contact c into its side s (0 = a, 1 = b).
    fn entered(&self, state: usize) -> usize {
        let c = &self.contacts[state / 2];
        if state.is_multiple_of(2) {
            c.a.0
        } else {
            c.b.0
        }
    }

    fn state(&self, contact: usize, into: usize) -> usize {
        2 * contact + usize::from(self.contacts[contact].a.0 != into)
    }

    fn search(&self, from: usize) -> Vec<f64> {
        let mut dist = vec![f64::INFINITY; 2 * self.contacts.len()];
        let mut heap = BinaryHeap::new();
        for &c in &self.by_placement[from] {
            let s = self.state(c, self.contacts[c].other(from));
            dist[s] = 0.0;
            heap.push(Entry(0.0, s));
        }
        while let Some(Entry(d, s)) = heap.pop() {
            if d > dist[s] {
                continue;
            }
            let here = self.entered(s);
            if !self.routable[here] {
                continue;
            }
            let p = self.contacts[s / 2].point;
            for &c in &self.by_placement[here] {
                if c == s / 2 {
                    continue;
                }
                let next = self.contacts[c].other(here);
                let t = self.state(c, next);
                let nd = d + l1(p, self.contacts[c].point);
                if nd < dist[t] {
                    dist[t] = nd;
                    heap.push(Entry(nd, t));
                }
            }
        }
        dist
    }

    fn best_into(&self, dist: &[f64], target: usize, extra: impl Fn((f64, f64)) -> f64) -> f64 {
        self.by_placement[target]
            .iter()
            .map(|&c| dist[self.state(c, target)] + extra(self.contacts[c].point))
            .fold(f64::INFINITY, f64::min)
    }

    /// Shortest route length from `from` to `to` in µm.
    pub fn route_length(&self, from: PlacementId, to: PlacementId) -> Result<f64, RoutingError> {
        self.check(from)?;
        self.check(to)?;
        if from == to {
            return Ok(0.0);
        }
        let dist = self.search(from.0);
        let d = self.best_into(&dist, to.0, |_| 0.0);
        if d.is_finite() {
            Ok(d)
        } else {
            Err(RoutingError::NoRoute { from, to })
        }
    }

    /// Route lengths from `from` to each of `targets`, `None` where unreachable.
    pub fn route_lengths(&self, from: PlacementId, targets: &[PlacementId]) -> Result<Vec<Option<f64>>, RoutingError> {
        self.check(from)?;
        for &t in targets {
            self.check(t)?;
        }
        let dist = self.search(from.0);
        Ok(targets
            .iter()
            .map(|&t| {
                if t == from {
                    return Some(0.0);
                }
                let d = self.best_into(&dist, t.0, |_| 0.0);
                d.is_finite().then_some(d)
            })
            .collect())
    }

    /// Route length from `from` to a point on or inside a communication
    /// module, such as a port on the edge of a sub-floorplan.
    pub fn route_to_point(&self, plan: &Floorplan, from: PlacementId, point: (f64, f64)) -> Result<f64, RoutingError> {
        self.check(from)?;
        let holds = |id: usize| {
            let r = plan.placements()[id].rect();
            point.0 >= r.x0 - GEOM_EPS_UM
                && point.0 <= r.x1 + GEOM_EPS_UM
                && point.1 >= r.y0 - GEOM_EPS_UM
                && point.1 <= r.y1 + GEOM_EPS_UM
        };
        if holds(from.0) {
            return Ok(0.0);
        }
        let dist = self.search(from.0);
        let d = (0..self.by_placement.len())
            .filter(|&id| self.routable[id] && holds(id))
            .map(|id| self.best_into(&dist, id, |p| l1(p, point)))
            .fold(f64::INFINITY, f64::min);
        if d.is_finite() {
            Ok(d)
        } else {
            Err(RoutingError::NoRouteToPoint {
                from,
                x_um: point.0,
                y_um: point.1,
            })
        }
    }
}

/// Shortest route between two placements of `plan`, in µm.
pub fn path_length(plan: &Floorplan, from: PlacementId, to: PlacementId) -> Result<f64, RoutingError> {
    RoutingGraph::new(plan).route_length(from, to)
}
