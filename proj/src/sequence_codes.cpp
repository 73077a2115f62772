#include "latcodes/sequence_codes.hpp"

#include <algorithm>

#include "latcodes/error.hpp"

namespace latcodes {

PeriodWord::PeriodWord(std::vector<int> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw Error(ErrorKind::InvalidArgument, "period word is empty");
  for (int b : bits_) {
    if (b != 0 && b != 1) throw Error(ErrorKind::InvalidArgument, "period word entries must be 0 or 1");
    weight_ += b;
  }
}

PeriodWord PeriodWord::parse(std::string_view text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw Error(ErrorKind::Parse, "period word '" + std::string(text) + "' is not a 0/1 string");
    bits.push_back(c - '0');
  }
  return PeriodWord(std::move(bits));
}

std::string PeriodWord::str() const {
  std::string s;
  for (int b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

SequenceWindow::SequenceWindow(int lo, std::vector<int> bits) : lo_(lo), bits_(std::move(bits)) {
  for (int b : bits_)
    if (b != 0 && b != 1) throw Error(ErrorKind::InvalidArgument, "sequence entries must be 0 or 1");
}

SequenceWindow SequenceWindow::periodic(const PeriodWord& period, int lo, int hi) {
  std::vector<int> bits;
  for (int i = lo; i <= hi; ++i) {
    int pos = i > 0 ? i - 1 : i;
    bits.push_back(period.bits()[static_cast<std::size_t>(floor_mod(pos, period.length()))]);
  }
  return SequenceWindow(lo, std::move(bits));
}

SequenceWindow SequenceWindow::null(int lo, int hi) {
  return SequenceWindow(lo, std::vector<int>(static_cast<std::size_t>(std::max(0, hi - lo + 1)), 0));
}

SequenceWindow SequenceWindow::parse(std::string_view text, int lo) {
  std::vector<int> bits;
  for (char c : text) {
    if (c == ',' || c == ' ') continue;
    if (c != '0' && c != '1') throw Error(ErrorKind::Parse, "sequence must consist of 0/1 digits");
    bits.push_back(c - '0');
  }
  return SequenceWindow(lo, std::move(bits));
}

int SequenceWindow::at(int i) const {
  if (i < lo() || i > hi())
    throw Error(ErrorKind::WindowTooSmall, "sequence index " + std::to_string(i) + " outside window");
  return bits_[static_cast<std::size_t>(i - lo_)];
}

// Anchors satisfy x - y = 4i (A_i) and 4i + 1 (B_i), and translation by
// (2,2) preserves x - y, so the index range follows from the region's
// diagonal extent alone.
std::optional<IndexRange> required_indices(const Region& region) {
  if (region.empty()) return std::nullopt;
  int i_lo = ceil_div(region.x0 - region.y1 - 1, 4);
  int i_hi = floor_div(region.x1 - region.y0, 4);
  return IndexRange{std::min(i_lo, 0), std::max(i_hi, 0)};
}

namespace {

void emit_translates(LatticeSet& out, int bx, int by, const Region& r) {
  int j_lo = std::max(ceil_div(r.y0 - by, 2), ceil_div(r.x0 - bx, 2));
  int j_hi = std::min(floor_div(r.y1 - by, 2), floor_div(r.x1 - bx, 2));
  for (int j = j_lo; j <= j_hi; ++j) out.insert({bx + 2 * j, by + 2 * j});
}

}  // namespace

LatticeSet psi_window(const SequenceWindow& window, const Region& region) {
  auto need = required_indices(region);
  if (!need) return {};
  if ((need->lo < 0 && window.lo() > need->lo) || (need->hi > 0 && window.hi() < need->hi))
    throw Error(ErrorKind::WindowTooSmall,
                "region needs sequence indices " + std::to_string(need->lo) + ".." +
                    std::to_string(need->hi) + " but window covers " + std::to_string(window.lo()) +
                    ".." + std::to_string(window.hi()));
  LatticeSet out;
  int ax = 0, ay = 0;
  emit_translates(out, 0, 0, region);
  emit_translates(out, 1, 0, region);
  for (int i = 1; i <= need->hi; ++i) {
    int a = window.at(i);
    ax += 4 + a;
    ay += a;
    emit_translates(out, ax, ay, region);
    emit_translates(out, ax + 1, ay, region);
  }
  ax = ay = 0;
  for (int i = -1; i >= need->lo; --i) {
    int a = window.at(i);
    ax -= 4 + a;
    ay -= a;
    emit_translates(out, ax, ay, region);
    emit_translates(out, ax + 1, ay, region);
  }
  return out;
}

std::optional<LatticePoint> interior_pds_violation(const LatticeSet& s, const Region& interior) {
  if (interior.empty()) return std::nullopt;
  for (int x = interior.x0; x <= interior.x1; ++x) {
    for (int y = interior.y0; y <= interior.y1; ++y) {
      if (s.count({x, y})) continue;
      int c = static_cast<int>(s.count({x - 1, y}) + s.count({x + 1, y}) + s.count({x, y - 1}) +
                               s.count({x, y + 1}));
      if (c != 1) return LatticePoint{x, y};
    }
  }
  return std::nullopt;
}

bool psi_is_pds_on_window(const SequenceWindow& window, const Region& interior, int pad) {
  if (pad < 1) throw Error(ErrorKind::InvalidArgument, "pad must be at least 1");
  LatticeSet s = psi_window(window, interior.grown(pad));
  return !interior_pds_violation(s, interior).has_value();
}

LatticeSet unit_cells(const LatticeSet& s, const Region& cells) {
  LatticeSet out;
  if (cells.empty()) return out;
  for (int x = cells.x0; x <= cells.x1; ++x)
    for (int y = cells.y0; y <= cells.y1; ++y)
      if (!s.count({x, y}) && !s.count({x + 1, y}) && !s.count({x, y + 1}) && !s.count({x + 1, y + 1}))
        out.insert({x, y});
  return out;
}

LatticeSet psi_dual(const SequenceWindow& window, const Region& region) {
  if (region.empty()) return {};
  Region support{region.x0, region.y0, region.x1 + 1, region.y1 + 1};
  return unit_cells(psi_window(window, support), region);
}

std::optional<int> Tile::label_at(int column, int row) const {
  if (row < 0 || row >= static_cast<int>(rows.size())) return std::nullopt;
  const auto& r = rows[static_cast<std::size_t>(row)];
  int offset = column - row_start[static_cast<std::size_t>(row)];
  if (offset < 0 || offset >= static_cast<int>(r.size())) return std::nullopt;
  return r[static_cast<std::size_t>(offset)];
}

PeriodWord canonical_rotation(const PeriodWord& period) {
  if (period.weight() == 0) return period;
  std::vector<int> bits = period.bits();
  auto last_one = std::find(bits.rbegin(), bits.rend(), 1).base();
  std::rotate(bits.begin(), last_one, bits.end());
  return PeriodWord(std::move(bits));
}

std::vector<std::vector<int>> unit_blocks(const PeriodWord& period) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> current;
  const PeriodWord rotated = canonical_rotation(period);
  for (int b : rotated.bits()) {
    current.push_back(b);
    if (b == 1) {
      blocks.push_back(std::move(current));
      current.clear();
    }
  }
  return blocks;
}

std::vector<int> xi_labels(const std::vector<int>& block) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < block.size(); ++i) out.insert(out.end(), {6, 4, 2, 0});
  out.insert(out.end(), {6, 4, 2});
  return out;
}

std::vector<int> eta_labels(const std::vector<int>& block) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < block.size(); ++i) out.insert(out.end(), {7, 5, 3, 1});
  out.insert(out.end(), {7, 5, 3, 1, 0});
  return out;
}

Tile fundamental_tile(const PeriodWord& period) {
  Tile tile;
  if (period.weight() == 0) {
    std::vector<int> top, bottom;
    for (int i = 0; i < period.length(); ++i) {
      top.insert(top.end(), {6, 4, 2, 0});
      bottom.insert(bottom.end(), {7, 5, 3, 1});
    }
    tile.rows = {top, bottom};
    tile.row_start = {0, 0};
    return tile;
  }
  auto blocks = unit_blocks(period);
  // Each eta sits under its xi; the next xi continues the eta's row.
  int xi_start = 0;
  tile.rows.push_back(xi_labels(blocks[0]));
  tile.row_start.push_back(0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::vector<int> row = eta_labels(blocks[i]);
    int row_start = xi_start;
    xi_start += static_cast<int>(row.size());
    if (i + 1 < blocks.size()) {
      auto xi = xi_labels(blocks[i + 1]);
      row.insert(row.end(), xi.begin(), xi.end());
    }
    tile.rows.push_back(std::move(row));
    tile.row_start.push_back(row_start);
  }
  return tile;
}

LabelArray m_array(const PeriodWord& period) {
  const int p = period.p();
  Tile tile = fundamental_tile(period);
  std::vector<int> first, second;
  auto append_rows = [&tile](std::vector<int>& dst, std::size_t parity) {
    for (std::size_t r = parity; r < tile.rows.size(); r += 2)
      dst.insert(dst.end(), tile.rows[r].begin(), tile.rows[r].end());
  };
  if (period.weight() == 0) {
    first = tile.rows[0];
    second = tile.rows[1];
  } else {
    append_rows(first, 0);
    append_rows(second, 1);
    if (period.weight() % 2 == 1) {
      std::vector<int> odd = first;
      append_rows(first, 1);
      second.insert(second.end(), odd.begin(), odd.end());
    }
  }
  if (static_cast<int>(first.size()) != p || static_cast<int>(second.size()) != p)
    throw Error(ErrorKind::ConstructionBug, "label array strip of " + period.str() + " has wrong width");

  LabelArray out;
  out.p = p;
  for (int strip = 0; strip < p / 2; ++strip) {
    out.rows.push_back(first);
    out.rows.push_back(second);
    std::rotate(first.rbegin(), first.rbegin() + 2, first.rend());
    std::rotate(second.rbegin(), second.rbegin() + 2, second.rend());
  }
  return out;
}

CodeSet phi(const PeriodWord& period) {
  const int p = period.p();
  Region region = Region::square(-p, 2 * p - 1);
  auto need = required_indices(region);
  LatticeSet lifted = psi_window(SequenceWindow::periodic(period, need->lo, need->hi), region);

  for (int x = region.x0; x <= region.x1; ++x)
    for (int y = region.y0; y <= region.y1; ++y)
      if (lifted.count({x, y}) != lifted.count({floor_mod(x, p), floor_mod(y, p)}))
        throw Error(ErrorKind::ConstructionBug, "lift of " + period.str() + " is not p-periodic");

  Graph torus = make_torus({p, p});
  std::vector<Index> members;
  for (const auto& pt : lifted)
    if (pt[0] >= 0 && pt[0] < p && pt[1] >= 0 && pt[1] < p) members.push_back(torus.index({pt[0], pt[1]}));
  VertexSet code = make_vertex_set(std::move(members));
  if (static_cast<int>(code.size()) * 4 != p * p || !is_parallel_tpc(torus, code))
    throw Error(ErrorKind::ConstructionBug, "projection of " + period.str() + " is not a parallel TPC");
  return make_code_set(torus, KindSpec{CodeKind::Ptpc, 1}, code);
}

}  // namespace latcodes
