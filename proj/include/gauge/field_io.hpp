#pragma once

// JGF1 field container.
//
//   JGF1
//   family <U1|SU2|SU3|SU<N>>
//   rep_dim <k>
//   dim <n>
//   extent <e_1> ... <e_n>
//   spacing <h_1> ... <h_n>
//   value-kind <kind>
//
// Each header line ends in '\n'. The payload follows immediately: for every
// grid point in lexicographic order (last axis fastest), the complex entries
// of the value as little-endian float64 pairs (re, im). Matrices are written
// row-major. Per-point layouts:
//
//   group, algebra   N*N entries
//   rep-vector       k entries
//   scalar           1 entry (im = 0)
//   jet1-gauge       g, a_1 .. a_n
//   jet2-gauge       g, a_1 .. a_n, s_mu_nu for mu <= nu (row-major)
//   jet-connection   A_1 .. A_n, dA_mu_nu (row-major, dA_mu_nu = d_mu A_nu)
//
// Points outside a field's valid interior are written as zeros.

#include "gauge/jets.hpp"
#include "gauge/lie.hpp"
#include "gauge/patch.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace gauge {

enum class ValueKind { Group, Algebra, RepVector, Scalar, Jet1Gauge, Jet2Gauge, JetConnection };

std::string to_string(ValueKind kind);
ValueKind parse_value_kind(const std::string& name);

struct FieldHeader {
  GroupSpec group;
  int rep_dim = 0;
  Patch patch;
  ValueKind kind = ValueKind::Group;
};

using AnyField = std::variant<Field<GroupElement>, Field<AlgebraElement>, Field<RepVector>, Field<double>,
                              Field<Jet1Gauge>, Field<Jet2Gauge>, Field<JetConnection>>;

struct FieldFile {
  FieldHeader header;
  AnyField field;
};

void write_field(std::ostream& out, const GroupSpec& group, const Field<GroupElement>& f);
void write_field(std::ostream& out, const GroupSpec& group, const Field<AlgebraElement>& f);
void write_field(std::ostream& out, const GroupSpec& group, const Field<RepVector>& f);
void write_field(std::ostream& out, const GroupSpec& group, const Field<double>& f);
void write_field(std::ostream& out, const GroupSpec& group, const Field<Jet1Gauge>& f);
void write_field(std::ostream& out, const GroupSpec& group, const Field<Jet2Gauge>& f);
void write_field(std::ostream& out, const GroupSpec& group, const Field<JetConnection>& f);

/// Throws std::runtime_error on malformed input.
FieldHeader read_header(std::istream& in);
FieldFile read_field(std::istream& in);

void write_field_file(const std::string& path, const GroupSpec& group, const AnyField& f);
FieldFile read_field_file(const std::string& path);

}  // namespace gauge
