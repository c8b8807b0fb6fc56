#include "degenkit/abelian.hpp"

#include <set>

#include "degenkit/error.hpp"
#include "degenkit/matrix_io.hpp"

namespace degenkit {

void BlockHom::check_shape() const {
  const std::size_t r = alpha.rows();
  const std::size_t c = alpha.cols();
  for (const IntMatrix* m : {&beta, &gamma, &delta}) {
    if (m->rows() != r || m->cols() != c) throw Error(Errc::ShapeMismatch, "blocks of f have different shapes");
  }
  if (r == 0 || c == 0 || r % 2 != 0 || c % 2 != 0) {
    throw Error(Errc::ShapeMismatch, "blocks must be 2g_B x 2g_A with g_A, g_B >= 1, got " + std::to_string(r) +
                                         "x" + std::to_string(c));
  }
}

IntMatrix BlockHom::to_matrix() const {
  check_shape();
  const std::size_t r = target_rank();
  const std::size_t c = source_rank();
  IntMatrix m(2 * r, 2 * c);
  m.set_block(0, 0, alpha);
  m.set_block(0, c, beta);
  m.set_block(r, 0, gamma);
  m.set_block(r, c, delta);
  return m;
}

BlockHom BlockHom::from_matrix(const IntMatrix& m, std::size_t target_rank, std::size_t source_rank) {
  if (m.rows() != 2 * target_rank || m.cols() != 2 * source_rank) {
    throw Error(Errc::ShapeMismatch, "matrix does not split into the requested blocks");
  }
  return BlockHom{m.block(0, 0, target_rank, source_rank), m.block(0, source_rank, target_rank, source_rank),
                  m.block(target_rank, 0, target_rank, source_rank),
                  m.block(target_rank, source_rank, target_rank, source_rank)};
}

BlockHom f_tilde(const BlockHom& f) {
  f.check_shape();
  return BlockHom{f.delta.transpose(), -f.beta.transpose(), -f.gamma.transpose(), f.alpha.transpose()};
}

BlockHom compose(const BlockHom& f, const BlockHom& g) {
  f.check_shape();
  g.check_shape();
  if (f.source_rank() != g.target_rank()) throw Error(Errc::ShapeMismatch, "f o g: source of f is not target of g");
  return BlockHom{f.alpha * g.alpha + f.beta * g.gamma, f.alpha * g.beta + f.beta * g.delta,
                  f.gamma * g.alpha + f.delta * g.gamma, f.gamma * g.beta + f.delta * g.delta};
}

bool is_symplectic(const BlockHom& f) {
  f.check_shape();
  if (f.source_rank() != f.target_rank()) throw Error(Errc::ShapeMismatch, "is_symplectic needs g_A = g_B");
  const IntMatrix m = f.to_matrix();
  const IntMatrix t = f_tilde(f).to_matrix();
  const IntMatrix id = IntMatrix::identity(m.rows());
  return t * m == id && m * t == id;
}

BlockHom parse_block_hom(std::string_view text) {
  auto blocks = parse_labeled_matrices(text, {"ALPHA", "BETA", "GAMMA", "DELTA"});
  BlockHom f{std::move(blocks.at("ALPHA")), std::move(blocks.at("BETA")), std::move(blocks.at("GAMMA")),
             std::move(blocks.at("DELTA"))};
  f.check_shape();
  return f;
}

std::string write_block_hom(const BlockHom& f) {
  return "ALPHA\n" + write_matrix(f.alpha) + "BETA\n" + write_matrix(f.beta) + "GAMMA\n" + write_matrix(f.gamma) +
         "DELTA\n" + write_matrix(f.delta);
}

void check_orbit_data(const KunnemannOrbitData& data) {
  if (data.torus_rank < 0) throw Error(Errc::BadOrbit, "torus_rank must be nonnegative");
  if (data.good_reduction) {
    if (!data.orbits.empty()) throw Error(Errc::BadOrbit, "good reduction takes no orbit records");
    return;
  }
  if (data.torus_rank < 1) throw Error(Errc::BadOrbit, "a degeneration needs torus_rank >= 1");
  std::set<long> seen;
  for (const auto& orbit : data.orbits) {
    if (orbit.cone_dim < 1 || orbit.cone_dim > data.torus_rank + 1) {
      throw Error(Errc::BadOrbit, "cone dimension " + std::to_string(orbit.cone_dim) + " outside 1.." +
                                      std::to_string(data.torus_rank + 1));
    }
    const auto expected = static_cast<std::size_t>(data.torus_rank + 2 - orbit.cone_dim);
    if (orbit.f_vector.size() != expected) {
      throw Error(Errc::BadOrbit, "cone of dimension " + std::to_string(orbit.cone_dim) + " needs an f-vector of length " +
                                      std::to_string(expected));
    }
    if (orbit.f_vector.front() != 1) throw Error(Errc::BadOrbit, "f-vector must start with 1");
    for (const auto& f : orbit.f_vector) {
      if (f <= 0) throw Error(Errc::BadOrbit, "f-vector entries must be positive");
    }
    seen.insert(orbit.cone_dim);
  }
  for (long s = 1; s <= data.torus_rank + 1; ++s) {
    if (!seen.contains(s)) throw Error(Errc::BadOrbit, "no orbit of cone dimension " + std::to_string(s));
  }
}

KunnemannClass kunnemann_rho(const KunnemannOrbitData& data, const Catalog& catalog) {
  catalog.at(data.abelian_label);
  check_orbit_data(data);
  const VarElement a0 = VarElement::label(data.abelian_label);
  VarElement v;
  if (data.good_reduction) {
    v = a0;
  } else {
    for (const auto& orbit : data.orbits) {
      const long s = orbit.cone_dim;
      const Integer weight = (s % 2 == 1 ? s : -s);
      v += weight * (a0 * toric_class(orbit.f_vector));
    }
  }
  return KunnemannClass{v, mu(v, catalog), reduce_mod_L_minus_1(v)};
}

KunnemannOrbitData parse_orbit_data(std::string_view text) {
  const kv::Document doc = kv::Document::parse(text);
  doc.expect_sections({});
  const kv::Section& root = doc.root();
  root.expect_keys({"torus_rank", "abelian_label", "good_reduction"}, true);

  KunnemannOrbitData d;
  d.torus_rank = parse_small_int(root.require("torus_rank"), 0, 64, "torus_rank");
  if (auto label = root.get("abelian_label")) {
    if (!is_valid_label_name(*label)) throw Error(Errc::Parse, "invalid abelian_label '" + label->substr(0, 40) + "'");
    d.abelian_label = *label;
  }
  if (auto flag = root.get("good_reduction")) {
    if (*flag == "true") {
      d.good_reduction = true;
    } else if (*flag != "false") {
      throw Error(Errc::Parse, "good_reduction must be true or false");
    }
  }
  for (const auto& e : root.entries) {
    if (e.value) continue;
    std::vector<std::string_view> fields;
    std::string_view rest = e.key;
    while (!rest.empty()) {
      const auto start = rest.find_first_not_of(" \t");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto end = rest.find_first_of(" \t");
      fields.push_back(rest.substr(0, end));
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
    }
    if (fields.size() < 2) {
      throw Error(Errc::Parse, "line " + std::to_string(e.line) + ": orbit record needs 'cone_dim f0 ...'");
    }
    ToricOrbit orbit;
    orbit.cone_dim = parse_small_int(fields[0], 0, 65, "cone_dim");
    for (std::size_t i = 1; i < fields.size(); ++i) orbit.f_vector.push_back(parse_integer(fields[i]));
    d.orbits.push_back(std::move(orbit));
  }
  return d;
}

}  // namespace degenkit
