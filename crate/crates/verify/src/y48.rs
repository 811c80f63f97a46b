//! Checks Y1-Y4: the second presentation of the surface in P^6 and the
//! 48-nodal complete intersection of four quadrics.

use std::sync::OnceLock;

use serde_json::json;

use nodalcov::arith::{Field, FieldTower};
use nodalcov::poly::{parse_poly_with, Macros, MonomialOrder, Poly, PolyRing, Ring, RingExt};
use nodalcov::scheme::ProjScheme;

use crate::check::{Lowering, Outcome};
use crate::data::ScenarioData;
use crate::RunError;

pub const CHECKS: [(&str, &str); 4] = [
    ("Y1", "V(B^2 - CD, Q, u, v) equals V(Q, I, u, v) in P^6"),
    ("Y2", "the singular subscheme of Y48 has dimension 0"),
    ("Y3", "the singular subscheme of Y48 has degree 48"),
    ("Y4", "the reduced singular subscheme of Y48 has degree 48"),
];

#[derive(Clone, Debug)]
pub struct Y48Input {
    pub tower: FieldTower,
    pub variables: Vec<String>,
    pub macros: Vec<(String, String)>,
    pub q: String,
    pub i: String,
    pub b: String,
    pub c: String,
    pub d: String,
}

impl Y48Input {
    pub fn from_data(data: &ScenarioData) -> Result<Self, RunError> {
        if data.config.variables.len() != 7 {
            return Err(RunError::Config("y48: expected 7 variables".into()));
        }
        Ok(Y48Input {
            tower: crate::tower_of(&data.config)?,
            variables: data.config.variables.clone(),
            macros: data.config.macros.clone(),
            q: data.polynomial("Q")?.to_string(),
            i: data.polynomial("I")?.to_string(),
            b: data.file("B.txt")?.to_string(),
            c: data.file("C.txt")?.to_string(),
            d: data.file("D.txt")?.to_string(),
        })
    }
}

pub(crate) struct Parsed {
    ring: Ring<FieldTower>,
    polys: [Poly<FieldTower>; 5],
}

impl Parsed {
    pub(crate) fn new(input: &Y48Input) -> Result<Self, RunError> {
        let names: Vec<&str> = input.variables.iter().map(String::as_str).collect();
        let ring = PolyRing::new(input.tower.clone(), &names, MonomialOrder::DegRevLex)
            .map_err(|e| RunError::Config(e.to_string()))?;
        let mut macros = Macros::new();
        for (k, v) in &input.macros {
            macros.define(k, v);
        }
        let parse = |s: &str| parse_poly_with(s, &ring, &macros).map_err(|e| RunError::Config(format!("{e}")));
        let polys = [
            parse(&input.q)?,
            parse(&input.i)?,
            parse(&input.b)?,
            parse(&input.c)?,
            parse(&input.d)?,
        ];
        Ok(Parsed { ring, polys })
    }
}

type R<T> = Result<T, String>;

fn s<E: ToString>(e: E) -> String {
    e.to_string()
}

pub(crate) struct Context<F: Field> {
    ring: Ring<F>,
    q: Poly<F>,
    i: Poly<F>,
    b: Poly<F>,
    c: Poly<F>,
    d: Poly<F>,
    sy48: OnceLock<R<ProjScheme<F>>>,
}

impl<F: Field> Context<F> {
    pub(crate) fn new<L: Lowering<F = F>>(p: &Parsed, low: &L) -> R<Self> {
        let names: Vec<&str> = p.ring.var_names().iter().map(String::as_str).collect();
        let ring = PolyRing::new(low.field(), &names, MonomialOrder::DegRevLex).map_err(s)?;
        let [q, i, b, c, d] = p
            .polys
            .each_ref()
            .map(|f| low.lower_poly(f, &ring).map_err(s));
        Ok(Context {
            q: q?,
            i: i?,
            b: b?,
            c: c?,
            d: d?,
            ring,
            sy48: OnceLock::new(),
        })
    }

    pub(crate) fn run(&self, id: &str) -> Outcome {
        match id {
            "Y1" => self.y1(),
            "Y2" => self.dim_deg(0, 0),
            "Y3" => self.dim_deg(1, 48),
            "Y4" => self.y4(),
            _ => Outcome::error(json!(null), format!("unknown check {id}")),
        }
    }

    fn sy48(&self) -> R<&ProjScheme<F>> {
        self.sy48
            .get_or_init(|| {
                let u = self.ring.var(5);
                let v = self.ring.var(6);
                let y = ProjScheme::from_generators(
                    &self.ring,
                    vec![
                        u.mul(&u).sub(&self.c),
                        v.mul(&v).sub(&self.d),
                        u.mul(&v).sub(&self.b),
                        self.q.clone(),
                    ],
                )
                .map_err(s)?;
                y.singular_subscheme(4).map_err(s)
            })
            .as_ref()
            .map_err(Clone::clone)
    }

    fn y1(&self) -> Outcome {
        let run = || -> R<bool> {
            let u = self.ring.var(5);
            let v = self.ring.var(6);
            let f = self.b.mul(&self.b).sub(&self.c.mul(&self.d));
            let x = ProjScheme::from_generators(&self.ring, vec![f, self.q.clone(), u.clone(), v.clone()]).map_err(s)?;
            let x40 = ProjScheme::from_generators(&self.ring, vec![self.q.clone(), self.i.clone(), u, v]).map_err(s)?;
            x.scheme_equal(&x40).map_err(s)
        };
        match run() {
            Ok(eq) => Outcome::equal(json!(true), json!(eq)),
            Err(e) => Outcome::error(json!(true), e),
        }
    }

    fn dim_deg(&self, slot: usize, want: i64) -> Outcome {
        match self.sy48().and_then(|z| z.dim_degree().map_err(s)) {
            Ok((dim, deg)) => {
                let got = if slot == 0 { dim } else { deg as i64 };
                Outcome::equal(json!(want), json!(got))
            }
            Err(e) => Outcome::error(json!(want), e),
        }
    }

    fn y4(&self) -> Outcome {
        match self.sy48().and_then(|z| z.reduced().and_then(|r| r.degree()).map_err(s)) {
            Ok(deg) => Outcome::equal(json!(48), json!(deg)),
            Err(e) => Outcome::error(json!(48), e),
        }
    }
}
