//! Semidirect products `Γ𝒢 ⋊ G` for a finite group `G` of graph symmetries
//! that preserve vertex groups, acting on words by relabelling syllables.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DefiningGraph, VertexId};
use crate::group::GroupElem;
use crate::word::{NormalForm, Syllable};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    pub name: String,
    pub map: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ActionDoc {
    pub perms: Vec<Permutation>,
}

/// A validated finite group of automorphisms of the defining graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphAction {
    perms: Vec<Permutation>,
    by_name: HashMap<String, usize>,
    by_map: HashMap<Vec<u32>, usize>,
    identity: usize,
}

impl GraphAction {
    pub fn from_doc(doc: &ActionDoc, graph: &DefiningGraph) -> Result<Self> {
        let n = graph.vertex_count();
        let mut by_name = HashMap::new();
        let mut by_map = HashMap::new();
        for (i, p) in doc.perms.iter().enumerate() {
            if p.map.len() != n {
                return Err(Error::ActionInvalid(format!(
                    "{} has {} entries for {n} vertices",
                    p.name,
                    p.map.len()
                )));
            }
            let image: BTreeSet<u32> = p.map.iter().copied().collect();
            if image.len() != n || image.iter().any(|&x| x as usize >= n) {
                return Err(Error::ActionInvalid(format!(
                    "{} is not a permutation",
                    p.name
                )));
            }
            for (a, b) in graph.edges() {
                let (pa, pb) = (VertexId(p.map[a.idx()]), VertexId(p.map[b.idx()]));
                if !graph.adjacent(pa, pb) {
                    return Err(Error::ActionInvalid(format!(
                        "{} sends edge ({a}, {b}) to non-edge ({pa}, {pb})",
                        p.name
                    )));
                }
            }
            for v in graph.vertices() {
                let pv = VertexId(p.map[v.idx()]);
                if graph.group(v) != graph.group(pv) {
                    return Err(Error::ActionInvalid(format!(
                        "{} sends vertex {v} to {pv} with a different group",
                        p.name
                    )));
                }
            }
            if by_name.insert(p.name.clone(), i).is_some() {
                return Err(Error::ActionInvalid(format!("duplicate name {}", p.name)));
            }
            if by_map.insert(p.map.clone(), i).is_some() {
                return Err(Error::ActionInvalid(format!("{} is listed twice", p.name)));
            }
        }
        let id: Vec<u32> = (0..n as u32).collect();
        let identity = *by_map
            .get(&id)
            .ok_or_else(|| Error::ActionInvalid("identity permutation missing".into()))?;
        for p in &doc.perms {
            for q in &doc.perms {
                let pq: Vec<u32> = (0..n).map(|v| p.map[q.map[v] as usize]).collect();
                if !by_map.contains_key(&pq) {
                    return Err(Error::ActionInvalid(format!(
                        "not closed: {}*{} is missing",
                        p.name, q.name
                    )));
                }
            }
        }
        Ok(GraphAction {
            perms: doc.perms.clone(),
            by_name,
            by_map,
            identity,
        })
    }

    pub fn from_json(text: &str, graph: &DefiningGraph) -> Result<Self> {
        let doc: ActionDoc = serde_json::from_str(text)?;
        Self::from_doc(&doc, graph)
    }

    /// Only the identity.
    pub fn trivial(graph: &DefiningGraph) -> Self {
        let doc = ActionDoc {
            perms: vec![Permutation {
                name: "id".into(),
                map: (0..graph.vertex_count() as u32).collect(),
            }],
        };
        Self::from_doc(&doc, graph).expect("identity is always an action")
    }

    pub fn to_doc(&self) -> ActionDoc {
        ActionDoc {
            perms: self.perms.clone(),
        }
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn identity(&self) -> &str {
        &self.perms[self.identity].name
    }

    pub fn get(&self, name: &str) -> Result<&Permutation> {
        self.by_name
            .get(name)
            .map(|&i| &self.perms[i])
            .ok_or_else(|| Error::UnknownPermutation(name.to_string()))
    }

    fn name_of(&self, map: &[u32]) -> &str {
        &self.perms[self.by_map[map]].name
    }

    /// Name of `p*q`, where `(p*q)(v) = p(q(v))`.
    pub fn compose(&self, p: &str, q: &str) -> Result<&str> {
        let (p, q) = (self.get(p)?, self.get(q)?);
        let pq: Vec<u32> = q.map.iter().map(|&v| p.map[v as usize]).collect();
        Ok(self.name_of(&pq))
    }

    pub fn inverse(&self, p: &str) -> Result<&str> {
        let p = self.get(p)?;
        let mut inv = vec![0u32; p.map.len()];
        for (v, &pv) in p.map.iter().enumerate() {
            inv[pv as usize] = v as u32;
        }
        Ok(self.name_of(&inv))
    }

    /// The automorphism `α_p`: relabel each syllable's vertex by `p`.
    pub fn apply_automorphism(
        &self,
        p: &str,
        w: &NormalForm,
        graph: &DefiningGraph,
    ) -> Result<NormalForm> {
        let p = self.get(p)?;
        Ok(NormalForm::from_syllables(
            w.syllables().iter().map(|s| Syllable {
                vertex: VertexId(p.map[s.vertex.idx()]),
                elem: s.elem,
            }),
            graph,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WreathElem {
    pub word: NormalForm,
    pub actor: String,
}

/// `Γ𝒢 ⋊ G` for a fixed graph and action.
#[derive(Debug, Clone)]
pub struct Wreath<'a> {
    pub graph: &'a DefiningGraph,
    pub action: &'a GraphAction,
}

impl<'a> Wreath<'a> {
    pub fn new(graph: &'a DefiningGraph, action: &'a GraphAction) -> Self {
        Wreath { graph, action }
    }

    pub fn elem(&self, word: NormalForm, actor: &str) -> Result<WreathElem> {
        self.check(&WreathElem {
            word,
            actor: actor.to_string(),
        })
    }

    fn check(&self, x: &WreathElem) -> Result<WreathElem> {
        if !self.action.by_name.contains_key(&x.actor) || x.word.validate(self.graph).is_err() {
            return Err(Error::ActionMismatch);
        }
        Ok(x.clone())
    }

    pub fn identity(&self) -> WreathElem {
        WreathElem {
            word: NormalForm::identity(),
            actor: self.action.identity().to_string(),
        }
    }

    /// `(w1, g1)(w2, g2) = (w1 α_{g1}(w2), g1 g2)`.
    pub fn mul(&self, x: &WreathElem, y: &WreathElem) -> Result<WreathElem> {
        self.check(x)?;
        self.check(y)?;
        let moved = self
            .action
            .apply_automorphism(&x.actor, &y.word, self.graph)?;
        Ok(WreathElem {
            word: x.word.mul(&moved, self.graph),
            actor: self.action.compose(&x.actor, &y.actor)?.to_string(),
        })
    }

    /// `(w, g)^-1 = (α_{g^-1}(w^-1), g^-1)`.
    pub fn inverse(&self, x: &WreathElem) -> Result<WreathElem> {
        self.check(x)?;
        let gi = self.action.inverse(&x.actor)?;
        Ok(WreathElem {
            word: self
                .action
                .apply_automorphism(gi, &x.word.inverse(self.graph), self.graph)?,
            actor: gi.to_string(),
        })
    }

    /// The action on Cayley vertices: `(w, g) . v = w α_g(v)`.
    pub fn act_on_cayley(&self, x: &WreathElem, v: &NormalForm) -> Result<NormalForm> {
        self.check(x)?;
        Ok(x.word.mul(
            &self.action.apply_automorphism(&x.actor, v, self.graph)?,
            self.graph,
        ))
    }
}

pub fn wreath_mul(w: &Wreath<'_>, x: &WreathElem, y: &WreathElem) -> Result<WreathElem> {
    w.mul(x, y)
}

pub fn conjugation_action_on_cayley(
    w: &Wreath<'_>,
    x: &WreathElem,
    v: &NormalForm,
) -> Result<NormalForm> {
    w.act_on_cayley(x, v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StabilizerProbe {
    pub vertex: VertexId,
    pub element: NormalForm,
    /// Pure symmetries fixing both `1` and the Cayley vertex `[g]`.
    pub fixing_both: Vec<String>,
    /// Symmetries fixing `v` in the defining graph.
    pub fixing_vertex: Vec<String>,
    pub equal: bool,
}

/// For `g` nontrivial in `G_v`: which pure symmetries fix both `1` and `[g]`.
pub fn wreath_stabilizer_probe(
    graph: &DefiningGraph,
    action: &GraphAction,
    v: VertexId,
    g: &GroupElem,
) -> Result<StabilizerProbe> {
    graph.check_vertex(v)?;
    if g.is_identity() || **graph.group(v) != *g.group {
        return Err(Error::GroupMismatch);
    }
    let w = Wreath::new(graph, action);
    let elem = NormalForm::syllable(Syllable {
        vertex: v,
        elem: g.index,
    });
    let one = NormalForm::identity();
    let mut fixing_both = Vec::new();
    let mut fixing_vertex = Vec::new();
    for p in action.perms() {
        let x = w.elem(NormalForm::identity(), &p.name)?;
        if w.act_on_cayley(&x, &one)? == one && w.act_on_cayley(&x, &elem)? == elem {
            fixing_both.push(p.name.clone());
        }
        if p.map[v.idx()] == v.0 {
            fixing_vertex.push(p.name.clone());
        }
    }
    fixing_both.sort();
    fixing_vertex.sort();
    Ok(StabilizerProbe {
        vertex: v,
        element: elem,
        equal: fixing_both == fixing_vertex,
        fixing_both,
        fixing_vertex,
    })
}

/// The rotation group of an `n`-cycle, named `r0..r{n-1}`.
pub fn rotations(n: usize) -> ActionDoc {
    ActionDoc {
        perms: (0..n)
            .map(|k| Permutation {
                name: format!("r{k}"),
                map: (0..n).map(|v| ((v + k) % n) as u32).collect(),
            })
            .collect(),
    }
}
