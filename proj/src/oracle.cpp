#include <algorithm>
#include <functional>

#include "matchstick/charge.hpp"
#include "matchstick/error.hpp"

namespace matchstick {

int LocalConfig::count(int face_size) const {
  auto it = face_counts.find(face_size);
  return it == face_counts.end() ? 0 : it->second;
}

std::size_t OracleTable::violations() const {
  std::size_t total = 0;
  for (const OracleBound& b : bounds) total += b.violations;
  return total;
}

namespace {

bool is_positive_type(const LocalConfig& c) {
  return c.degree == 5 && c.count(3) == 4 && c.count(5) == 1;
}

void observe(OracleBound& bound, const Rational& ratio, bool violated) {
  if (bound.rows == 0 || ratio > bound.observed_max) bound.observed_max = ratio;
  ++bound.rows;
  if (violated) ++bound.violations;
}

}  // namespace

OracleTable local_config_oracle(const OracleOptions& options) {
  for (int d : options.degrees) {
    if (d < 5 || d > 7) {
      throw Error(ErrorCode::kInvalidArgument, "degree " + std::to_string(d) + " outside {5, 6, 7}");
    }
  }
  if (options.face_size_cap < 3) {
    throw Error(ErrorCode::kInvalidArgument, "face size cap must be at least 3");
  }
  if (options.max_triangles < 0) {
    throw Error(ErrorCode::kInvalidArgument, "triangle limit must be non-negative");
  }

  OracleTable table;
  table.options = options;
  std::vector<int> degrees = options.degrees;
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

  for (int d : degrees) {
    std::vector<int> sizes;
    // Nondecreasing sequences of face sizes, i.e. multisets.
    std::function<void(int)> extend = [&](int smallest) {
      if (static_cast<int>(sizes.size()) == d) {
        LocalConfig row;
        row.degree = d;
        for (int s : sizes) ++row.face_counts[s];
        if (row.count(3) > options.max_triangles || row.count(5) < 1) return;
        Rational f;
        for (const auto& [s, n] : row.face_counts) f += Rational(10 - 3 * s, s) * n;
        row.ratio = (f - 2 * (d - 5)) / row.count(5);
        table.rows.push_back(std::move(row));
        return;
      }
      for (int s = smallest; s <= options.face_size_cap; ++s) {
        sizes.push_back(s);
        extend(s);
        sizes.pop_back();
      }
    };
    extend(3);
  }

  OracleBound several{"f5>=2", "f5 >= 2 implies ratio <= -1/2", Rational(-1, 2)};
  OracleBound high{"f5=1,d>=6", "f5 = 1 and d >= 6 imply ratio <= -4/3", Rational(-4, 3)};
  OracleBound single{"f5=1,d=5", "f5 = 1 and d = 5 imply ratio <= 1/3, equality iff f3 = 4", Rational(1, 3)};
  OracleBound unique{"positive-type", "ratio > -1/2 only for d = 5, f3 = 4, f5 = 1", Rational(-1, 2)};

  for (const LocalConfig& row : table.rows) {
    const int f5 = row.count(5);
    if (f5 >= 2) {
      observe(several, row.ratio, row.ratio > several.bound);
    } else if (row.degree >= 6) {
      observe(high, row.ratio, row.ratio > high.bound);
    } else {
      const bool equal = row.ratio == single.bound;
      observe(single, row.ratio, row.ratio > single.bound || equal != (row.count(3) == 4));
    }
    if (!is_positive_type(row)) observe(unique, row.ratio, row.ratio > unique.bound);
  }
  for (OracleBound* b : {&several, &high, &single, &unique}) {
    b->attained = b->rows > 0 && b->observed_max == b->bound;
    table.bounds.push_back(*b);
  }
  return table;
}

PentagonBound pentagon_bound_check(const OracleTable& table) {
  const Rational positive_ratio(1, 3);
  std::vector<Rational> others;
  bool has_positive = false;
  for (const LocalConfig& row : table.rows) {
    if (is_positive_type(row)) {
      has_positive = true;
    } else {
      others.push_back(row.ratio);
    }
  }
  std::sort(others.begin(), others.end(), std::greater<>());
  others.erase(std::unique(others.begin(), others.end()), others.end());

  // Number of multisets of size k over n values.
  auto multisets = [](std::size_t n, int k) {
    std::size_t result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n + static_cast<std::size_t>(i) - 1) / static_cast<std::size_t>(i);
    return result;
  };

  PentagonBound out;
  bool first_admissible = true;
  for (int x = 0; x <= 5; ++x) {
    PentagonBoundRow row;
    row.positive = x;
    const int rest = 5 - x;
    if ((x > 0 && !has_positive) || (rest > 0 && others.empty())) {
      out.rows.push_back(row);
      continue;
    }
    row.configurations = multisets(others.size(), rest);

    // Branch and bound over nonincreasing index sequences; values are sorted
    // descending so a subtree cannot beat the running best once its
    // optimistic completion does not.
    bool found = false;
    Rational best;
    std::function<void(std::size_t, int, Rational)> descend = [&](std::size_t from, int left, Rational partial) {
      if (left == 0) {
        if (!found || partial > best) best = partial;
        found = true;
        return;
      }
      for (std::size_t i = from; i < others.size(); ++i) {
        if (found && partial + others[i] * left <= best) return;
        descend(i, left - 1, partial + others[i]);
      }
    };
    descend(0, rest, positive_ratio * x);
    row.max_sum = best;

    if (x <= 3) {
      if (first_admissible || row.max_sum > out.max_over_admissible) out.max_over_admissible = row.max_sum;
      first_admissible = false;
    }
    out.rows.push_back(row);
  }
  out.holds = !first_admissible && out.max_over_admissible <= 0;
  out.equality_at_three = out.rows.size() > 3 && out.rows[3].configurations > 0 && out.rows[3].max_sum == Rational(0);
  return out;
}

}  // namespace matchstick
