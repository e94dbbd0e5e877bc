#include "subshift/ktheory.hpp"

#include <algorithm>

namespace subshift {

PhiLevelMap phi_map(const LanguageTable& t, int level) {
  if (level < 1) fail(Errc::invalid_argument, "phi level must be >= 1");
  if (level + 1 > t.max_len()) fail(Errc::depth_exceeded, "phi map needs depth level + 1");
  PhiLevelMap m;
  m.level = level;
  m.source_basis = t.words(level);
  m.target_basis = t.words(level + 1);
  m.one_minus_phi = IntMatrix(m.target_basis.size(), m.source_basis.size());
  const std::size_t l = static_cast<std::size_t>(level);
  for (std::size_t j = 0; j < m.source_basis.size(); ++j) {
    const Word& w = m.source_basis[j];
    for (std::size_t i = 0; i < m.target_basis.size(); ++i) {
      const Word& x = m.target_basis[i];
      Int coeff = 0;
      if (x.compare(1, l, w) == 0) coeff += 1;  // x = bw: left refinement of chi_w
      if (x.compare(0, l, w) == 0) coeff -= 1;  // x = wa: subtracted range term
      m.one_minus_phi.at(i, j) = coeff;
    }
  }
  return m;
}

IntMatrix refine_matrix(const LanguageTable& t, int level) {
  if (level < 1) fail(Errc::invalid_argument, "refine level must be >= 1");
  if (level + 1 > t.max_len())
    fail(Errc::depth_exceeded, "refine matrix needs depth level + 1");
  const auto src = t.words(level);
  const auto dst = t.words(level + 1);
  IntMatrix r(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (std::size_t i = 0; i < dst.size(); ++i)
      if (dst[i].compare(1, static_cast<std::size_t>(level), src[j]) == 0) r.at(i, j) = 1;
  return r;
}

bool k1_witness(const PhiLevelMap& map) {
  const IntMatrix& m = map.one_minus_phi;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int sum = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) sum += m.at(i, j);
    if (sum != 0) return false;
  }
  return true;
}

NaturalityReport naturality_check(const LanguageTable& t, int level) {
  NaturalityReport rep;
  rep.level = level;
  if (level + 2 > t.max_len()) fail(Errc::depth_exceeded, "naturality needs depth level + 2");
  const PhiLevelMap lo = phi_map(t, level);
  const PhiLevelMap hi = phi_map(t, level + 1);
  const IntMatrix r_lo = refine_matrix(t, level);
  const IntMatrix r_hi = refine_matrix(t, level + 1);
  const IntMatrix lhs = r_hi * lo.one_minus_phi;
  const IntMatrix rhs = hi.one_minus_phi * r_lo;
  rep.pass = lhs == rhs;
  if (!rep.pass) {
    for (std::size_t j = 0; j < lhs.cols() && rep.witness.empty(); ++j)
      for (std::size_t i = 0; i < lhs.rows(); ++i)
        if (lhs.at(i, j) != rhs.at(i, j)) {
          rep.witness = lo.source_basis[j];
          break;
        }
  }
  return rep;
}

SNFReport snf_report(const PhiLevelMap& map) {
  SNFReport rep;
  rep.level = map.level;
  rep.rows = map.one_minus_phi.rows();
  rep.cols = map.one_minus_phi.cols();
  const SmithNormalForm snf = smith_normal_form(map.one_minus_phi);
  rep.rank = snf.rank();
  rep.kernel_rank = rep.cols - rep.rank;
  rep.coker_free_rank = rep.rows - rep.rank;
  rep.invariant_factors = snf.invariant_factors;
  for (const Int& f : snf.invariant_factors)
    if (f > 1) rep.coker_torsion.push_back(f);
  rep.certified = snf.verify(map.one_minus_phi);
  return rep;
}

namespace {

// Canonical representative of a vector in the Smith coordinates of a
// cokernel: torsion coordinates into [0, d_i), image coordinates of
// rank positions with d_i == 1 become 0, free part untouched.
void reduce_in_snf_coords(std::vector<Int>& y, const std::vector<Int>& factors) {
  for (std::size_t i = 0; i < factors.size() && i < y.size(); ++i) {
    Int r = y[i] % factors[i];
    if (r < 0) r += factors[i];
    y[i] = r;
  }
}

std::vector<Int> matvec(const IntMatrix& m, const std::vector<Int>& x) {
  std::vector<Int> out(m.rows(), Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out[i] += m.at(i, j) * x[j];
  return out;
}

bool in_image(const SmithNormalForm& snf, const std::vector<Int>& y_std) {
  // y in Im(A) iff U y has coordinate i divisible by d_i for i < rank
  // and zero beyond.
  std::vector<Int> y = matvec(snf.u, y_std);
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf.invariant_factors.size()) {
      if (y[i] % snf.invariant_factors[i] != 0) return false;
    } else if (y[i] != 0) {
      return false;
    }
  }
  return true;
}

IntMatrix reduce_columns(IntMatrix m, const std::vector<Int>& factors) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::vector<Int> col(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m.at(i, j);
    reduce_in_snf_coords(col, factors);
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

}  // namespace

K0Report k0_stabilization(const LanguageTable& t, int first_level, int last_level) {
  if (first_level < 1 || last_level < first_level)
    fail(Errc::invalid_argument, "bad level range");
  if (last_level + 1 > t.max_len())
    fail(Errc::depth_exceeded, "k0 range needs depth last_level + 1");

  K0Report rep;
  rep.first_level = first_level;
  rep.last_level = last_level;

  std::vector<SmithNormalForm> snfs;
  std::vector<PhiLevelMap> maps;
  for (int l = first_level; l <= last_level; ++l) {
    maps.push_back(phi_map(t, l));
    snfs.push_back(smith_normal_form(maps.back().one_minus_phi));
    K0LevelData data;
    data.level = l;
    data.free_rank = maps.back().one_minus_phi.rows() - snfs.back().rank();
    for (const Int& f : snfs.back().invariant_factors)
      if (f > 1) data.torsion.push_back(f);
    rep.per_level.push_back(std::move(data));
  }

  rep.stable = std::all_of(rep.per_level.begin(), rep.per_level.end(), [&](const auto& d) {
    return d.free_rank == rep.per_level.front().free_rank &&
           d.torsion == rep.per_level.front().torsion;
  });

  if (first_level == last_level) {
    rep.connecting_well_defined = true;
    rep.routes_agree = true;
    return rep;
  }

  // Connecting maps: the refinement one level above each (1-Phi).
  rep.connecting_well_defined = true;
  std::vector<IntMatrix> connecting;
  for (int l = first_level; l < last_level; ++l) {
    const std::size_t k = static_cast<std::size_t>(l - first_level);
    IntMatrix g = refine_matrix(t, l + 1);
    // Well-definedness: every relation at level l maps into the
    // relations at level l+1.
    const IntMatrix& d_lo = maps[k].one_minus_phi;
    for (std::size_t j = 0; j < d_lo.cols(); ++j) {
      std::vector<Int> col(d_lo.rows());
      for (std::size_t i = 0; i < d_lo.rows(); ++i) col[i] = d_lo.at(i, j);
      if (!in_image(snfs[k + 1], matvec(g, col))) rep.connecting_well_defined = false;
    }
    // In Smith coordinates of both ends.
    IntMatrix hat = snfs[k + 1].u * g * snfs[k].u_inv;
    rep.connecting_in_snf_coords.push_back(
        reduce_columns(std::move(hat), snfs[k + 1].invariant_factors));
    connecting.push_back(std::move(g));
  }

  // Route A: compose the refinements first, then present the induced map.
  IntMatrix composed = connecting.front();
  for (std::size_t k = 1; k < connecting.size(); ++k) composed = connecting[k] * composed;
  const IntMatrix route_a = reduce_columns(
      snfs.back().u * composed * snfs.front().u_inv, snfs.back().invariant_factors);

  // Route B: induce each step separately and compose the presentations.
  IntMatrix route_b = rep.connecting_in_snf_coords.front();
  for (std::size_t k = 1; k < rep.connecting_in_snf_coords.size(); ++k)
    route_b = reduce_columns(rep.connecting_in_snf_coords[k] * route_b,
                             snfs[k + 1].invariant_factors);

  rep.routes_agree = route_a == route_b;
  return rep;
}

}  // namespace subshift
