//! 2D geometric kernel: axis-aligned boxes, stable placement, collision,
//! line of sight, base-configuration sampling, and grid motion planning.
//!
//! Contact convention, used everywhere: interiors are open, so touching
//! edges never count as overlap or blocking.
//!
//! All functions are pure over immutable [`Scene`] snapshots.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use rand::Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: f64,
    pub y: f64,
}

impl Vec2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Vec2 { x, y }
    }

    pub fn dist(self, other: Vec2) -> f64 {
        ((self.x - other.x).powi(2) + (self.y - other.y).powi(2)).sqrt()
    }
}

/// A body placement: axis-aligned bodies carry position only, no rotation.
pub type Pose2 = Vec2;

/// A geometric value attached to a continuous object: a point (pose or base
/// configuration) or a polyline trajectory.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum Payload {
    Point(Vec2),
    Path(Vec<Vec2>),
}

impl Payload {
    pub fn as_point(&self) -> Option<Vec2> {
        match self {
            Payload::Point(p) => Some(*p),
            Payload::Path(_) => None,
        }
    }

    pub fn as_path(&self) -> Option<&[Vec2]> {
        match self {
            Payload::Path(p) => Some(p),
            Payload::Point(_) => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Aabb {
    pub min: Vec2,
    pub max: Vec2,
}

impl Aabb {
    pub fn new(min: Vec2, max: Vec2) -> Self {
        debug_assert!(min.x <= max.x && min.y <= max.y);
        Aabb { min, max }
    }

    pub fn from_corners(x0: f64, y0: f64, x1: f64, y1: f64) -> Self {
        Aabb::new(Vec2::new(x0.min(x1), y0.min(y1)), Vec2::new(x0.max(x1), y0.max(y1)))
    }

    /// Body of size `dims` centered at `pose`.
    pub fn from_center(pose: Vec2, dims: Vec2) -> Self {
        let half = Vec2::new(dims.x / 2.0, dims.y / 2.0);
        Aabb::new(
            Vec2::new(pose.x - half.x, pose.y - half.y),
            Vec2::new(pose.x + half.x, pose.y + half.y),
        )
    }

    pub fn center(&self) -> Vec2 {
        Vec2::new((self.min.x + self.max.x) / 2.0, (self.min.y + self.max.y) / 2.0)
    }

    pub fn width(&self) -> f64 {
        self.max.x - self.min.x
    }

    pub fn height(&self) -> f64 {
        self.max.y - self.min.y
    }

    /// Grow by `half` on all sides (Minkowski sum with a `2·half` box).
    pub fn inflated(&self, half: Vec2) -> Aabb {
        Aabb {
            min: Vec2::new(self.min.x - half.x, self.min.y - half.y),
            max: Vec2::new(self.max.x + half.x, self.max.y + half.y),
        }
    }

    /// Closed containment: `other` may touch this box's edges from inside.
    pub fn contains(&self, other: &Aabb) -> bool {
        self.min.x <= other.min.x
            && self.min.y <= other.min.y
            && other.max.x <= self.max.x
            && other.max.y <= self.max.y
    }

    pub fn contains_point(&self, p: Vec2) -> bool {
        self.min.x <= p.x && p.x <= self.max.x && self.min.y <= p.y && p.y <= self.max.y
    }

    fn contains_point_open(&self, p: Vec2) -> bool {
        self.min.x < p.x && p.x < self.max.x && self.min.y < p.y && p.y < self.max.y
    }
}

/// True iff the interiors intersect; shared edges do not count.
pub fn aabb_overlap(a: &Aabb, b: &Aabb) -> bool {
    a.min.x < b.max.x && b.min.x < a.max.x && a.min.y < b.max.y && b.min.y < a.max.y
}

/// True iff the open segment pq crosses the open interior of `b`.
/// Slab clipping; grazing along an edge or corner does not count.
fn segment_hits_interior(p: Vec2, q: Vec2, b: &Aabb) -> bool {
    let d = Vec2::new(q.x - p.x, q.y - p.y);
    let mut t0 = 0.0f64;
    let mut t1 = 1.0f64;
    for (pa, da, lo, hi) in [(p.x, d.x, b.min.x, b.max.x), (p.y, d.y, b.min.y, b.max.y)] {
        if da.abs() < 1e-12 {
            if pa <= lo || pa >= hi {
                return false;
            }
        } else {
            let (ta, tb) = {
                let a = (lo - pa) / da;
                let b = (hi - pa) / da;
                if a < b {
                    (a, b)
                } else {
                    (b, a)
                }
            };
            t0 = t0.max(ta);
            t1 = t1.min(tb);
            if t0 >= t1 {
                return false;
            }
        }
    }
    // (t0, t1) is the open parameter interval inside the interior.
    t0 < t1
}

/// 2D workspace snapshot: bounds, fixed obstacles, named regions, and the
/// dimensions of movable bodies and robot footprints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub bounds: Aabb,
    pub fixed_obstacles: Vec<Aabb>,
    /// Named regions: placement surfaces, photograph targets, patches.
    pub surfaces: BTreeMap<String, Aabb>,
    /// Movable body footprint dimensions (width, height).
    pub movables: BTreeMap<String, Vec2>,
    /// Robot footprint dimensions.
    pub robots: BTreeMap<String, Vec2>,
    pub grid_resolution: f64,
}

impl Scene {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scene serializes")
    }

    pub fn from_json(text: &str) -> Result<Scene, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum PlacementCheck {
    Valid,
    NotStable,
    Collision { offender: String },
}

impl PlacementCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, PlacementCheck::Valid)
    }
}

/// Valid iff the body footprint at `pose` lies inside `surface` and
/// overlaps none of `others` (checked in order; first offender reported).
pub fn placement_valid(
    body_dims: Vec2,
    pose: Pose2,
    surface: &Aabb,
    others: &[(String, Aabb)],
) -> PlacementCheck {
    let body = Aabb::from_center(pose, body_dims);
    if !surface.contains(&body) {
        return PlacementCheck::NotStable;
    }
    for (name, other) in others {
        if aabb_overlap(&body, other) {
            return PlacementCheck::Collision { offender: name.clone() };
        }
    }
    PlacementCheck::Valid
}

/// Rejection-sample a pose on `surface` passing [`placement_valid`].
pub fn sample_placement(
    body_dims: Vec2,
    surface: &Aabb,
    others: &[(String, Aabb)],
    rng: &mut impl Rng,
    max_attempts: u32,
) -> Option<Pose2> {
    let lo = Vec2::new(surface.min.x + body_dims.x / 2.0, surface.min.y + body_dims.y / 2.0);
    let hi = Vec2::new(surface.max.x - body_dims.x / 2.0, surface.max.y - body_dims.y / 2.0);
    if lo.x > hi.x || lo.y > hi.y {
        return None;
    }
    for _ in 0..max_attempts {
        let pose = Vec2::new(sample_range(rng, lo.x, hi.x), sample_range(rng, lo.y, hi.y));
        if placement_valid(body_dims, pose, surface, others).is_valid() {
            return Some(pose);
        }
    }
    None
}

fn sample_range(rng: &mut impl Rng, lo: f64, hi: f64) -> f64 {
    if hi > lo {
        rng.gen_range(lo..hi)
    } else {
        lo
    }
}

/// True iff the open segment pq intersects no obstacle interior.
/// Symmetric in (p, q).
pub fn line_of_sight(p: Vec2, q: Vec2, obstacles: &[Aabb]) -> bool {
    obstacles.iter().all(|b| !segment_hits_interior(p, q, b))
}

/// Constraints for base-configuration sampling.
#[derive(Debug, Clone, Copy, Default)]
pub struct ConfigConstraint {
    /// Require line of sight from the config center to this point.
    pub los_to: Option<Vec2>,
    /// Require the config center within this distance of the point.
    pub near: Option<(Vec2, f64)>,
}

/// Sample a robot base configuration: inside bounds, footprint clear of all
/// fixed obstacles, satisfying `constraint`. Attempts alternate between the
/// whole workspace and a window around the constraint target so that small
/// visibility cones are still found within the attempt budget.
pub fn sample_config(
    scene: &Scene,
    robot_dims: Vec2,
    constraint: ConfigConstraint,
    rng: &mut impl Rng,
    max_attempts: u32,
) -> Option<Pose2> {
    let half = Vec2::new(robot_dims.x / 2.0, robot_dims.y / 2.0);
    let lo = Vec2::new(scene.bounds.min.x + half.x, scene.bounds.min.y + half.y);
    let hi = Vec2::new(scene.bounds.max.x - half.x, scene.bounds.max.y - half.y);
    if lo.x > hi.x || lo.y > hi.y {
        return None;
    }
    let focus = constraint.near.map(|(t, _)| t).or(constraint.los_to);
    for attempt in 0..max_attempts {
        let (slo, shi) = match focus {
            Some(t) if attempt % 2 == 1 => {
                let r = constraint.near.map(|(_, d)| d).unwrap_or(3.0);
                (
                    Vec2::new((t.x - r).max(lo.x), (t.y - r).max(lo.y)),
                    Vec2::new((t.x + r).min(hi.x), (t.y + r).min(hi.y)),
                )
            }
            _ => (lo, hi),
        };
        let pose = Vec2::new(sample_range(rng, slo.x, shi.x), sample_range(rng, slo.y, shi.y));
        if config_valid(scene, robot_dims, pose, constraint) {
            return Some(pose);
        }
    }
    None
}

/// The check behind [`sample_config`], also used to verify proposed configs.
pub fn config_valid(
    scene: &Scene,
    robot_dims: Vec2,
    pose: Pose2,
    constraint: ConfigConstraint,
) -> bool {
    let body = Aabb::from_center(pose, robot_dims);
    if !scene.bounds.contains(&body) {
        return false;
    }
    if scene.fixed_obstacles.iter().any(|o| aabb_overlap(&body, o)) {
        return false;
    }
    if let Some((target, max_dist)) = constraint.near {
        if pose.dist(target) > max_dist {
            return false;
        }
    }
    if let Some(target) = constraint.los_to {
        if !line_of_sight(pose, target, &scene.fixed_obstacles) {
            return false;
        }
    }
    true
}

/// Sample a base configuration with line of sight to `target`.
pub fn sample_base_config(
    target: Vec2,
    scene: &Scene,
    robot_dims: Vec2,
    rng: &mut impl Rng,
    max_attempts: u32,
) -> Option<Pose2> {
    sample_config(
        scene,
        robot_dims,
        ConfigConstraint { los_to: Some(target), near: None },
        rng,
        max_attempts,
    )
}

#[derive(Debug, Clone, PartialEq, thiserror::Error, Serialize, Deserialize)]
pub enum MotionFailure {
    #[error("no path exists")]
    NoPath,
    #[error("path blocked by `{offender}`")]
    Blocked { offender: String },
}

/// Plan a grid path for a robot footprint from `start` to `goal`.
///
/// 8-connected lattice at `scene.grid_resolution`, anchored at `start`;
/// footprint collision via Minkowski-inflated obstacles. On failure the
/// first movable (in name order) whose sole removal admits a path is
/// reported as the offender; otherwise `NoPath`.
pub fn plan_motion(
    start: Pose2,
    goal: Pose2,
    scene: &Scene,
    robot_dims: Vec2,
    movables_at: &BTreeMap<String, (Vec2, Pose2)>,
) -> Result<Vec<Vec2>, MotionFailure> {
    let all: Vec<(Option<&str>, Aabb)> = obstacle_set(scene, movables_at, None);
    if let Some(path) = grid_astar(start, goal, scene, robot_dims, &all) {
        return Ok(path);
    }
    // Attribution: remove each movable alone and replan.
    for name in movables_at.keys() {
        let reduced = obstacle_set(scene, movables_at, Some(name));
        if grid_astar(start, goal, scene, robot_dims, &reduced).is_some() {
            return Err(MotionFailure::Blocked { offender: name.clone() });
        }
    }
    Err(MotionFailure::NoPath)
}

fn obstacle_set<'a>(
    scene: &'a Scene,
    movables_at: &'a BTreeMap<String, (Vec2, Pose2)>,
    skip: Option<&str>,
) -> Vec<(Option<&'a str>, Aabb)> {
    let mut out: Vec<(Option<&str>, Aabb)> =
        scene.fixed_obstacles.iter().map(|o| (None, *o)).collect();
    for (name, (dims, pose)) in movables_at {
        if Some(name.as_str()) != skip {
            out.push((Some(name.as_str()), Aabb::from_center(*pose, *dims)));
        }
    }
    out
}

/// True iff the robot footprint swept along `path` stays clear of the body
/// `dims` at `pose` (open-interior convention, endpoints included).
pub fn swept_path_hits_body(
    path: &[Vec2],
    robot_dims: Vec2,
    body_dims: Vec2,
    body_pose: Pose2,
) -> bool {
    let half = Vec2::new(robot_dims.x / 2.0, robot_dims.y / 2.0);
    let inflated = Aabb::from_center(body_pose, body_dims).inflated(half);
    if path.iter().any(|p| inflated.contains_point_open(*p)) {
        return true;
    }
    path.windows(2).any(|w| segment_hits_interior(w[0], w[1], &inflated))
}

fn grid_astar(
    start: Vec2,
    goal: Vec2,
    scene: &Scene,
    robot_dims: Vec2,
    obstacles: &[(Option<&str>, Aabb)],
) -> Option<Vec<Vec2>> {
    use std::cmp::Reverse;
    use std::collections::{BinaryHeap, HashMap};

    let res = scene.grid_resolution;
    debug_assert!(res > 0.0);
    let half = Vec2::new(robot_dims.x / 2.0, robot_dims.y / 2.0);
    let inflated: Vec<Aabb> = obstacles.iter().map(|(_, o)| o.inflated(half)).collect();
    let lo = Vec2::new(scene.bounds.min.x + half.x, scene.bounds.min.y + half.y);
    let hi = Vec2::new(scene.bounds.max.x - half.x, scene.bounds.max.y - half.y);

    let center_free = |p: Vec2| -> bool {
        lo.x <= p.x
            && p.x <= hi.x
            && lo.y <= p.y
            && p.y <= hi.y
            && !inflated.iter().any(|b| b.contains_point_open(p))
    };
    let edge_free =
        |a: Vec2, b: Vec2| -> bool { !inflated.iter().any(|o| segment_hits_interior(a, b, o)) };

    if !center_free(start) || !center_free(goal) {
        return None;
    }
    // Terminal hop: any lattice point within ~half a diagonal of the goal.
    let snap_radius = res * 0.7072;
    if start.dist(goal) <= snap_radius {
        return if edge_free(start, goal) { Some(vec![start, goal]) } else { None };
    }

    let node_pos = |c: (i32, i32)| Vec2::new(start.x + c.0 as f64 * res, start.y + c.1 as f64 * res);
    let h = |c: (i32, i32)| node_pos(c).dist(goal);

    let mut open: BinaryHeap<(Reverse<u64>, Reverse<u64>, (i32, i32))> = BinaryHeap::new();
    let mut g: HashMap<(i32, i32), f64> = HashMap::new();
    let mut parent: HashMap<(i32, i32), (i32, i32)> = HashMap::new();
    let key = |cost: f64| -> u64 { (cost * 1e9) as u64 };
    let mut counter = 0u64;

    g.insert((0, 0), 0.0);
    open.push((Reverse(key(h((0, 0)))), Reverse(0), (0, 0)));

    const STEPS: [(i32, i32); 8] =
        [(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)];

    while let Some((_, _, node)) = open.pop() {
        let npos = node_pos(node);
        let ng = g[&node];
        if npos.dist(goal) <= snap_radius && edge_free(npos, goal) {
            let mut path = vec![goal, npos];
            let mut cur = node;
            while let Some(&prev) = parent.get(&cur) {
                path.push(node_pos(prev));
                cur = prev;
            }
            path.reverse();
            return Some(path);
        }
        for (dx, dy) in STEPS {
            let next = (node.0 + dx, node.1 + dy);
            let pos = node_pos(next);
            if !center_free(pos) {
                continue;
            }
            let step = if dx == 0 || dy == 0 { res } else { res * std::f64::consts::SQRT_2 };
            let cand = ng + step;
            if g.get(&next).map_or(true, |&old| cand < old - 1e-12) && edge_free(npos, pos) {
                g.insert(next, cand);
                parent.insert(next, node);
                counter += 1;
                open.push((Reverse(key(cand + h(next))), Reverse(counter), next));
            }
        }
    }
    None
}

/// Render the scene (plus optional body placements and paths) as an SVG
/// document for debugging.
pub fn scene_to_svg(
    scene: &Scene,
    bodies_at: &BTreeMap<String, (Vec2, Pose2)>,
    paths: &[Vec<Vec2>],
) -> String {
    let scale = 60.0;
    let b = &scene.bounds;
    let w = b.width() * scale;
    let h = b.height() * scale;
    // SVG y grows downward; flip so +y is up.
    let tx = |p: Vec2| ((p.x - b.min.x) * scale, (b.max.y - p.y) * scale);
    let mut out = String::new();
    let _ = write!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w:.0}\" height=\"{h:.0}\" \
         viewBox=\"0 0 {w:.0} {h:.0}\">\n"
    );
    let _ = write!(out, "<rect width=\"{w:.0}\" height=\"{h:.0}\" fill=\"#fafafa\" stroke=\"#333\"/>\n");
    let mut rect = |aabb: &Aabb, fill: &str, label: Option<&str>| {
        let (x, y) = tx(Vec2::new(aabb.min.x, aabb.max.y));
        let _ = write!(
            out,
            "<rect x=\"{x:.1}\" y=\"{y:.1}\" width=\"{:.1}\" height=\"{:.1}\" fill=\"{fill}\" \
             stroke=\"#333\" stroke-width=\"0.5\"/>\n",
            aabb.width() * scale,
            aabb.height() * scale
        );
        if let Some(text) = label {
            let (cx, cy) = tx(aabb.center());
            let _ = write!(
                out,
                "<text x=\"{cx:.1}\" y=\"{cy:.1}\" font-size=\"10\" text-anchor=\"middle\">{text}</text>\n"
            );
        }
    };
    for (name, surface) in &scene.surfaces {
        rect(surface, "#d8f0d8", Some(name));
    }
    for obstacle in &scene.fixed_obstacles {
        rect(obstacle, "#888888", None);
    }
    for (name, (dims, pose)) in bodies_at {
        rect(&Aabb::from_center(*pose, *dims), "#f0c0c0", Some(name));
    }
    for path in paths {
        let pts: Vec<String> = path
            .iter()
            .map(|p| {
                let (x, y) = tx(*p);
                format!("{x:.1},{y:.1}")
            })
            .collect();
        let _ = write!(
            out,
            "<polyline points=\"{}\" fill=\"none\" stroke=\"#3060c0\" stroke-width=\"1.5\"/>\n",
            pts.join(" ")
        );
    }
    out.push_str("</svg>\n");
    out
}
