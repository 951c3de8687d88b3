//! Registry of the statements exercised by the check suites.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub statement: &'static str,
}

pub const CLAIMS: &[Claim] = &[
    Claim {
        id: "ucs-step",
        statement: "each successor stage maps onto the center of the quotient by the previous stage",
    },
    Claim {
        id: "hypercenter-last-stage",
        statement: "the hypercenter is the last stage of a terminated series",
    },
    Claim {
        id: "hypercenter-centerless-quotient",
        statement: "the quotient by the hypercenter has trivial center",
    },
    Claim {
        id: "hypercenter-nilpotent",
        statement: "for connected groups the hypercenter is a nilpotent normal subgroup",
    },
    Claim {
        id: "z-omega-nilpotent-normal",
        statement: "for connected groups the first limit stage is nilpotent and normal",
    },
    Claim {
        id: "fitting-largest",
        statement: "the Fitting subgroup is nilpotent, normal, and contains every nilpotent normal subgroup",
    },
    Claim {
        id: "fitting-construction",
        statement: "for connected groups the Fitting subgroup is the preimage of the unipotent radical of the quotient by the center",
    },
    Claim {
        id: "unipotent-over-finite-stage",
        statement: "for connected groups the first limit stage of the quotient by any finite stage other than the trivial one is unipotent",
    },
    Claim {
        id: "unipotent-over-center-s",
        statement: "for connected groups the first limit stage of the quotient by the multiplicative part of the center is unipotent",
    },
    Claim {
        id: "center-s-contains-mult-normal",
        statement: "normal subgroups of multiplicative type in a connected group lie in the multiplicative part of the center",
    },
    Claim {
        id: "ordinal-bound",
        statement: "the series terminates below omega squared, with at most rank X + dim L + 1 limit stages",
    },
    Claim {
        id: "stage-shift",
        statement: "stage alpha + i modulo stage alpha is stage i of the quotient by stage alpha",
    },
    Claim {
        id: "chain-union-class",
        statement: "the union of an ascending chain of class at most c subgroups has class at most c",
    },
    Claim {
        id: "chain-union-commutative",
        statement: "the union of an ascending chain of commutative subgroups is commutative",
    },
    Claim {
        id: "hypercenter-intersection",
        statement: "the hypercenter is the intersection of all normal subgroups with centerless quotient",
    },
    Claim {
        id: "hypercenter-functorial",
        statement: "a surjection with hypercentral kernel maps the hypercenter onto the hypercenter",
    },
    Claim {
        id: "class-bound",
        statement: "a nilpotent subgroup of upper triangular d x d matrices has class at most d(d-1)/2 + 1",
    },
    Claim {
        id: "example-stages",
        statement: "for the torus extended by inversion, stage i is mu_(2^i), stage omega is the torus, and the series ends at omega + 1",
    },
    Claim {
        id: "example-disconnected",
        statement: "for the torus extended by inversion, the hypercenter is not nilpotent and Z_omega over the first stage is not unipotent",
    },
];

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}
