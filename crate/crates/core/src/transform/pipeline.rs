use super::ops::{
    arc_transform, finish_one_with_case, finish_two_neighbors_deg2, relocate_min, star_transform,
};
use super::trace::{Step, TraceStep, TransformTrace};
use super::{SmallOrderCase, TransformError};
use crate::families::identify_family;
use crate::graph::{GraphError, Graph};
use crate::index::ga_index;
use crate::structure::{classify_in, find_cycle, is_unicyclic, CycleStructure};

struct Recorder {
    graph: Graph,
    ga: f64,
    steps: Vec<TraceStep>,
}

impl Recorder {
    fn apply(
        &mut self,
        step: Step,
        op: impl FnOnce(&Graph) -> Result<Graph, TransformError>,
    ) -> Result<(), TransformError> {
        let next = op(&self.graph)?;
        let ga = ga_index(&next).expect("unicyclic graphs have edges");
        self.steps.push(TraceStep {
            step,
            ga_before: self.ga,
            ga_after: ga,
            graph: next.clone(),
        });
        self.graph = next;
        self.ga = ga;
        Ok(())
    }

    fn cycle(&self) -> CycleStructure {
        find_cycle(&self.graph).expect("operators preserve unicyclicity")
    }
}

fn small_order_case(g: &Graph, cycle: &CycleStructure) -> SmallOrderCase {
    match (g.order(), cycle.girth()) {
        (3, _) => SmallOrderCase::C3,
        (_, 4) => SmallOrderCase::C4,
        _ => SmallOrderCase::Paw,
    }
}

/// Reduces a unicyclic graph on `n >= 5` vertices to `C_n`, `S_{n;3}`,
/// `S_{p,q;4}` or `S_{r,k;3}` without increasing GA, recording every step.
///
/// Vertex choices are deterministic: among equal candidates the smallest id
/// wins, so the same input always yields the same trace.
///
/// ```
/// use unicyclic_ga::{transform::reduction_pipeline, FamilySpec, Graph};
///
/// // C_6 with a pendant at 0 and another at 3
/// let g = Graph::new(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (3, 7)]).unwrap();
/// let trace = reduction_pipeline(&g).unwrap();
/// assert!(trace.terminal_ga <= trace.input_ga);
/// assert!(matches!(trace.terminal, FamilySpec::Spq4 { .. } | FamilySpec::Sn3 { .. } | FamilySpec::Srk3 { .. }));
/// ```
pub fn reduction_pipeline(g: &Graph) -> Result<TransformTrace, TransformError> {
    if !is_unicyclic(g) {
        return Err(GraphError::NotUnicyclic {
            n: g.order(),
            m: g.size(),
            connected: g.is_connected(),
        }
        .into());
    }
    let cycle = find_cycle(g)?;
    if g.order() < 5 {
        return Err(TransformError::SmallOrder(small_order_case(g, &cycle)));
    }
    let input_ga = ga_index(g).expect("unicyclic graphs have edges");
    let mut rec = Recorder {
        graph: g.clone(),
        ga: input_ga,
        steps: Vec::new(),
    };

    if cycle.girth() < g.order() {
        reduce(&mut rec, &cycle)?;
    }

    let terminal = identify_family(&rec.graph).ok_or(TransformError::UnrecognizedTerminal)?;
    Ok(TransformTrace {
        input: g.clone(),
        input_ga,
        steps: rec.steps,
        terminal,
        terminal_ga: rec.ga,
    })
}

fn reduce(rec: &mut Recorder, cycle: &CycleStructure) -> Result<(), TransformError> {
    let degree = |g: &Graph, w: usize| g.degree(w);
    let v = *cycle
        .vertices()
        .iter()
        .min_by_key(|&&w| (std::cmp::Reverse(degree(&rec.graph, w)), w))
        .expect("non-empty cycle");
    rec.apply(Step::StarTransform { v }, |g| star_transform(g, v))?;

    let u = *cycle
        .vertices()
        .iter()
        .filter(|&&w| w != v)
        .min_by_key(|&&w| (degree(&rec.graph, w), w))
        .expect("girth at least 3");
    rec.apply(Step::RelocateMin { u, v }, |g| relocate_min(g, u, v))?;

    let c = rec.cycle();
    if !c.are_adjacent(u, v) {
        let (a, b) = c.neighbors(v).expect("cycle vertex");
        let e = (v, a.min(b));
        rec.apply(Step::ArcTransform { u, e, v }, |g| arc_transform(g, u, e, v))?;
    }

    let c = rec.cycle();
    let other_min = c
        .vertices()
        .iter()
        .copied()
        .filter(|&w| w != u)
        .find(|&w| classify_in(&rec.graph, &c, w).is_ok_and(|k| k.local_min));

    let Some(u_bar) = other_min else {
        let (next, case) = finish_one_with_case(&rec.graph, v, u)?;
        return rec.apply(Step::FinishOneNeighborDeg2 { v, u, case }, |_| Ok(next));
    };

    rec.apply(Step::RelocateMin { u: u_bar, v }, |g| relocate_min(g, u_bar, v))?;
    let c = rec.cycle();
    if !c.are_adjacent(u_bar, v) {
        let (a, b) = c.neighbors(v).expect("cycle vertex");
        let e = (v, if a == u { b } else { a });
        rec.apply(Step::ArcTransform { u: u_bar, e, v }, |g| {
            arc_transform(g, u_bar, e, v)
        })?;
    }
    if rec.cycle().girth() == 3 {
        return Ok(());
    }
    rec.apply(Step::FinishTwoNeighborsDeg2 { v }, |g| finish_two_neighbors_deg2(g, v))
}
