//! Shared inputs for the benchmarks.

use moebius_core::rational::q_int;
use moebius_core::{parse_diagram, Diagram, ParamSet};

pub fn partition_pair() -> (Diagram, Diagram) {
    let a = "6;6;{1,2'}[0,0]|{2,4,5}[1,1]|{3,3'}[0,0]|{6,1',4',6'}[0,2]|{5'}[0,0]";
    let b = "6;6;{1,1'}[0,0]|{2,4,5}[0,0]|{3}[0,1]|{6,2',4',6'}[1,0]|{3'}[0,0]|{5'}[0,0]";
    (parse_diagram(a).expect("valid literal"), parse_diagram(b).expect("valid literal"))
}

pub fn constant_params(alpha0: i64, beta0: i64, gamma0: i64) -> ParamSet {
    ParamSet::constant(q_int(alpha0), q_int(beta0), q_int(gamma0)).expect("nonzero alpha")
}
