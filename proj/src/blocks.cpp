#include "triblock/blocks.hpp"

#include <algorithm>

namespace triblock::blk {

using cyc::Cyclotomic;

cyc::Cyclotomic central_character(const ct::CharacterTable& t, std::size_t row, std::size_t cls) {
  if (row >= t.rows() || cls >= t.cols()) throw error("central_character: index out of range");
  Cyclotomic w = t.values[row][cls].scaled(Rat(t.classes[cls].size, t.degrees[row]));
  if (!w.is_integral()) {
    throw error("central character is not an algebraic integer (broken table)");
  }
  return w;
}

BlockPartition block_partition(const ct::CharacterTable& t, int root_choice) {
  BlockPartition part;
  part.defect = t.order == 0 ? 0 : v3(t.order);
  cyc::Mod3Reducer red(t.exponent, root_choice);
  const std::size_t r = t.rows();
  // reduced central character vectors
  std::vector<std::vector<ff::FFElem>> reduced(r);
  for (std::size_t i = 0; i < r; ++i) {
    reduced[i].reserve(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) {
      reduced[i].push_back(red.reduce(central_character(t, i, j)));
    }
  }
  part.block_of.assign(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    bool placed = false;
    for (std::size_t b = 0; b < part.blocks.size() && !placed; ++b) {
      std::size_t rep = part.blocks[b].front();
      bool same = true;
      for (std::size_t j = 0; j < t.cols() && same; ++j) {
        if (!(reduced[i][j] == reduced[rep][j])) same = false;
      }
      if (same) {
        part.blocks[b].push_back(i);
        part.block_of[i] = b;
        placed = true;
      }
    }
    if (!placed) {
      part.block_of[i] = part.blocks.size();
      part.blocks.push_back({i});
    }
  }
  part.principal = part.block_of[t.trivial_row];
  return part;
}

SigmaReport sigma_report(const ct::CharacterTable& t, const BlockPartition& p) {
  SigmaReport rep;
  cyc::GaloisMap s = cyc::sigma(t.exponent);
  const std::size_t r = t.rows();
  // sigma permutes the rows; match images by exact value-vector equality
  rep.sigma_row_map.assign(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<Cyclotomic> image;
    image.reserve(t.cols());
    for (std::size_t j = 0; j < t.cols(); ++j) image.push_back(cyc::galois_apply(s, t.values[i][j]));
    std::size_t hit = r;
    for (std::size_t i2 = 0; i2 < r; ++i2) {
      if (t.degrees[i2] != t.degrees[i]) continue;
      bool same = true;
      for (std::size_t j = 0; j < t.cols() && same; ++j) {
        if (!(image[j] == t.values[i2][j])) same = false;
      }
      if (same) {
        hit = i2;
        break;
      }
    }
    if (hit == r) throw error("sigma image of a row matches no row (broken table)");
    rep.sigma_row_map[i] = hit;
  }
  for (std::size_t i : p.blocks[p.principal]) {
    if (t.degrees[i] % 3 != 0) rep.height_zero_rows.push_back(i);
  }
  rep.k0 = static_cast<long>(rep.height_zero_rows.size());
  for (std::size_t i : rep.height_zero_rows) {
    if (rep.sigma_row_map[i] == i) rep.fixed_rows.push_back(i);
  }
  rep.k0_sigma = static_cast<long>(rep.fixed_rows.size());
  // orbit sizes of sigma on the height-zero principal rows
  {
    std::vector<bool> in_set(r, false), seen(r, false);
    for (std::size_t i : rep.height_zero_rows) in_set[i] = true;
    for (std::size_t i : rep.height_zero_rows) {
      if (seen[i]) continue;
      long len = 0;
      std::size_t cur = i;
      do {
        if (!in_set[cur]) {
          throw error("sigma does not stabilize the height-zero principal rows (broken table)");
        }
        seen[cur] = true;
        ++len;
        cur = rep.sigma_row_map[cur];
      } while (cur != i);
      rep.orbit_sizes.push_back(len);
    }
    std::sort(rep.orbit_sizes.begin(), rep.orbit_sizes.end());
  }
  return rep;
}

TheoremACheck theorem_a_check(int syl3_rank, const SigmaReport& rep) {
  TheoremACheck out;
  out.rank = syl3_rank;
  out.two_generated = (syl3_rank == 2);
  out.k0 = rep.k0;
  out.k0_sigma = rep.k0_sigma;
  bool in_set = (rep.k0_sigma == 6 || rep.k0_sigma == 9);
  out.consistent = (out.two_generated == in_set);
  return out;
}

nlohmann::json report_json(const std::string& group, const Int& order, const BlockPartition& p,
                           const SigmaReport& rep, const TheoremACheck& check) {
  nlohmann::json j;
  j["group"] = group;
  j["order"] = order.str();
  j["defect"] = p.defect;
  j["k0"] = check.k0;
  j["k0_sigma"] = check.k0_sigma;
  j["rank"] = check.rank;
  j["two_generated"] = check.two_generated;
  j["theorem_a_consistent"] = check.consistent;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : p.blocks) blocks.push_back(b);
  j["blocks"] = blocks;
  j["principal_block"] = p.principal;
  j["sigma_orbit_sizes"] = rep.orbit_sizes;
  return j;
}

}  // namespace triblock::blk
