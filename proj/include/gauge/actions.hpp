#pragma once

// Local action laws of the gauge jet groups on matter jets, variations,
// connections, connection jets and curvature, and the witnesses that these
// actions are fiber transitive.

#include "gauge/jets.hpp"
#include "gauge/lie.hpp"
#include "gauge/patch.hpp"

#include <variant>
#include <vector>

namespace gauge {

RepVector act_matter(const Representation& rep, const GroupElement& g, const RepVector& phi);
Variation act_variation(const Representation& rep, const GroupElement& g, const Variation& v);

/// (g . phi, g . d_mu phi + (a_mu)_Q (g . phi)).
JetMatter act_jet_matter(const Representation& rep, const Jet1Gauge& j, const JetMatter& jm);

/// (g . A)_mu = Ad(g) A_mu - a_mu.
Connection act_connection(const Jet1Gauge& j, const Connection& a);

/// Transforms (A, dA):
///   d_mu A'_nu = Ad(g) d_mu A_nu + [a_mu, Ad(g) A_nu] - 1/2 [a_mu, a_nu] - s_mu_nu.
/// The antisymmetric part of d_mu a_nu is taken from the Maurer-Cartan
/// identity d_mu a_nu - d_nu a_mu = [a_mu, a_nu].
JetConnection act_jet_connection(const Jet2Gauge& j, const JetConnection& jc);

/// Symmetrized transformed derivative, d_mu A'_nu + d_nu A'_mu, evaluated
/// directly from its own closed form (cross-check for act_jet_connection).
SymmetricArray act_jet_connection_symmetric(const Jet2Gauge& j, const JetConnection& jc);
/// Antisymmetrized transformed derivative, d_mu A'_nu - d_nu A'_mu, from
/// its closed form.
AntisymmetricArray act_jet_connection_antisymmetric(const Jet2Gauge& j, const JetConnection& jc);

/// (g . F)_mu_nu = g F_mu_nu g^-1.
Curvature act_curvature(const GroupElement& g, const Curvature& f);

struct TransitivityWitness {
  MultiIndex point;  // empty for a single-fiber witness
  std::variant<Jet1Gauge, Jet2Gauge> jet;
  double residual = 0.0;             // norm of the gauged A (and sym dA)
  double curvature_residual = 0.0;   // jet2 only: |antisym part - F/2|
};

/// Jet (1, A) that gauges A to zero.
TransitivityWitness gauge_to_zero_jet1(const Connection& a);
/// Jet (1, A, sym dA) that gauges A and the symmetric part of dA to zero;
/// the remaining antisymmetric part equals half the curvature.
TransitivityWitness gauge_to_zero_jet2(const JetConnection& jc);

/// One witness per valid point of the field.
std::vector<TransitivityWitness> gauge_to_zero_jet1(const Field<Connection>& a);
std::vector<TransitivityWitness> gauge_to_zero_jet2(const Field<JetConnection>& jc);

}  // namespace gauge
