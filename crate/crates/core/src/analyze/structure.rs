//! Structural summary of a graph: the facts the constructive solver
//! dispatches on, gathered in one serialisable record.

use serde::{Deserialize, Serialize};

use crate::graph::{
    degeneracy, find_claw, find_induced_motif, find_min_separator, find_net, graph6, iso,
    ClawEmbedding, Graph, Motif, MotifEmbedding, NetEmbedding, Separator,
};

/// Which constructive procedure handles a graph's 3-colourings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    NotCubic,
    Components,
    K4,
    Prism,
    Cut,
    Claw,
    Net,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureReport {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub cubic: bool,
    pub connected: bool,
    pub degeneracy: usize,
    /// Least separator of size at most two, cliques first.
    pub separator: Option<Separator>,
    pub three_connected: bool,
    pub claw: Option<ClawEmbedding>,
    pub net: Option<NetEmbedding>,
    pub house: Option<MotifEmbedding>,
    pub diamond: Option<MotifEmbedding>,
    pub route: Route,
}

pub fn structure_report(g: &Graph) -> StructureReport {
    let connected = g.is_connected();
    let cubic = g.is_cubic();
    let separator = if connected {
        find_min_separator(g, 2).ok().flatten()
    } else {
        None
    };
    let three_connected = connected && g.n() >= 4 && separator.is_none();
    let claw = find_claw(g);
    let route = if !cubic {
        Route::NotCubic
    } else if !connected {
        Route::Components
    } else if iso::is_k4(g) {
        Route::K4
    } else if iso::is_prism(g) {
        Route::Prism
    } else if !three_connected {
        Route::Cut
    } else if claw.is_some() {
        Route::Claw
    } else {
        Route::Net
    };
    StructureReport {
        graph6: graph6::encode(g),
        n: g.n(),
        edges: g.edge_count(),
        cubic,
        connected,
        degeneracy: degeneracy(g).d,
        separator,
        three_connected,
        claw,
        net: find_net(g),
        house: find_induced_motif(g, Motif::House),
        diamond: find_induced_motif(g, Motif::Diamond),
        route,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn routes() {
        assert_eq!(structure_report(&named::complete(4)).route, Route::K4);
        assert_eq!(structure_report(&named::prism()).route, Route::Prism);
        assert_eq!(structure_report(&named::k33()).route, Route::Claw);
        assert_eq!(structure_report(&named::two_diamonds()).route, Route::Cut);
        assert_eq!(structure_report(&named::cycle(5)).route, Route::NotCubic);
        let t = named::truncate(&named::complete(4));
        let r = structure_report(&t);
        assert_eq!(r.route, Route::Net);
        assert!(r.three_connected && r.house.is_none() && r.diamond.is_none() && r.net.is_some());
    }

    #[test]
    fn prism_has_a_house() {
        let r = structure_report(&named::prism());
        assert!(r.house.is_some());
        assert!(r.claw.is_none());
    }

    #[test]
    fn round_trips_through_json() {
        let r = structure_report(&named::two_diamonds());
        let text = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<StructureReport>(&text).unwrap(), r);
    }
}
