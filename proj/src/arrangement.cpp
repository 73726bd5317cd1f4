#include "cellstrat/arrangement.hpp"

#include <algorithm>
#include <numeric>

#include "cellstrat/category.hpp"
#include "cellstrat/errors.hpp"

namespace cellstrat {
namespace {

bool proportional(const AffineForm& f, const AffineForm& g) {
  std::vector<Rational> a = f.coefficients;
  a.push_back(f.constant);
  std::vector<Rational> b = g.coefficients;
  b.push_back(g.constant);
  std::optional<Rational> ratio;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] == 0) != (b[i] == 0)) return false;
    if (a[i] == 0) continue;
    Rational r = b[i] / a[i];
    if (ratio && *ratio != r) return false;
    ratio = r;
  }
  return true;
}

int level_of(SignValue v) { return v < 0 ? -v : v; }

}  // namespace

Arrangement::Arrangement(std::size_t dimension, std::vector<AffineForm> forms)
    : dimension_(dimension), forms_(std::move(forms)) {
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    const auto& f = forms_[i];
    if (f.dimension() != dimension_) {
      throw InputError("arrangement: form " + std::to_string(i) + " has " + std::to_string(f.dimension()) +
                       " coefficients, expected " + std::to_string(dimension_));
    }
    if (f.is_constant() && f.constant == 0) {
      throw InputError("arrangement: form " + std::to_string(i) + " is identically zero");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(forms_[j], f)) {
        throw InputError("arrangement: forms " + std::to_string(j) + " and " + std::to_string(i) +
                         " define the same hyperplane");
      }
    }
  }
}

std::string SignVector::id() const {
  std::string out;
  if (order == 1) {
    for (SignValue v : values) out += v > 0 ? '+' : (v < 0 ? '-' : '0');
    return out;
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    const SignValue v = values[i];
    if (v == 0) {
      out += '0';
    } else {
      out += (v > 0 ? "+e" : "-e") + std::to_string(level_of(v));
    }
  }
  return out;
}

bool SignVector::has_zero() const { return std::find(values.begin(), values.end(), 0) != values.end(); }

bool sign_leq(const SignVector& a, const SignVector& b) {
  if (a.values.size() != b.values.size()) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (!sign_leq(a.values[i], b.values[i])) return false;
  }
  return true;
}

std::vector<SignValue> parse_sign_id(const std::string& id, int order) {
  std::vector<SignValue> out;
  auto bad = [&] { return InputError("malformed sign vector '" + id + "'"); };
  if (order == 1) {
    for (char ch : id) {
      if (ch == '+') {
        out.push_back(1);
      } else if (ch == '-') {
        out.push_back(-1);
      } else if (ch == '0') {
        out.push_back(0);
      } else {
        throw bad();
      }
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= id.size()) {
    std::size_t end = id.find(',', start);
    if (end == std::string::npos) end = id.size();
    std::string token = id.substr(start, end - start);
    if (token == "0") {
      out.push_back(0);
    } else if (token.size() >= 3 && (token[0] == '+' || token[0] == '-') && token[1] == 'e') {
      int level = 0;
      try {
        level = std::stoi(token.substr(2));
      } catch (const std::exception&) {
        throw bad();
      }
      if (level < 1 || level > order) throw bad();
      out.push_back(token[0] == '+' ? level : -level);
    } else {
      throw bad();
    }
    start = end + 1;
  }
  return out;
}

LinearSystem level_system(const Arrangement& a, std::span<const SignValue> values, int level, std::size_t prefix) {
  LinearSystem system(a.dimension());
  for (std::size_t i = 0; i < prefix && i < values.size(); ++i) {
    const SignValue v = values[i];
    const int lv = level_of(v);
    if (v == 0 || lv < level) {
      system.add_zero(a.form(i));
    } else if (lv == level) {
      system.add_positive(v > 0 ? a.form(i) : -a.form(i));
    }
  }
  return system;
}

namespace {

bool prefix_realizable(const Arrangement& a, std::span<const SignValue> values, int order, std::size_t prefix) {
  for (int j = 1; j <= order; ++j) {
    if (!level_system(a, values, j, prefix).feasible()) return false;
  }
  return true;
}

FacePoset build_face_poset(int order, std::vector<SignVector> faces) {
  std::sort(faces.begin(), faces.end(), [](const SignVector& x, const SignVector& y) { return x.id() < y.id(); });
  std::vector<std::string> ids;
  for (const auto& f : faces) ids.push_back(f.id());
  std::vector<std::vector<std::size_t>> above(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (std::size_t j = 0; j < faces.size(); ++j) {
      if (i != j && sign_leq(faces[i], faces[j])) above[i].push_back(j);
    }
  }
  FacePoset out;
  out.order = order;
  out.poset = Poset::from_indices(std::move(ids), std::move(above));
  out.faces = std::move(faces);
  return out;
}

}  // namespace

bool realizable(const Arrangement& a, std::span<const SignValue> values, int order) {
  return prefix_realizable(a, values, order, values.size());
}

int face_dimension(const Arrangement& a, std::span<const SignValue> values, int order) {
  int total = 0;
  for (int j = 1; j <= order; ++j) {
    std::vector<AffineForm> zeros;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == 0 || level_of(values[i]) < j) zeros.push_back(a.form(i));
    }
    total += static_cast<int>(a.dimension() - linear_rank(zeros));
  }
  return total;
}

FacePoset enumerate_higher_faces(const Arrangement& a, int order) {
  if (order < 1) throw InputError("order must be at least 1");
  std::vector<SignValue> candidates{0};
  for (int j = 1; j <= order; ++j) {
    candidates.push_back(j);
    candidates.push_back(-j);
  }

  std::vector<SignVector> faces;
  std::vector<SignValue> current;
  // Depth-first over hyperplanes, pruning infeasible prefixes.
  auto extend = [&](auto&& self) -> void {
    if (current.size() == a.size()) {
      faces.push_back({current, order, face_dimension(a, current, order)});
      return;
    }
    for (SignValue v : candidates) {
      current.push_back(v);
      if (prefix_realizable(a, current, order, current.size())) self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return build_face_poset(order, std::move(faces));
}

FacePoset enumerate_faces(const Arrangement& a) { return enumerate_higher_faces(a, 1); }

FacePoset complement_subposet(const FacePoset& fp) {
  FacePoset out;
  out.order = fp.order;
  out.poset = fp.poset.induced([&](std::size_t i) { return !fp.faces[i].has_zero(); });
  for (const auto& f : fp.faces) {
    if (!f.has_zero()) out.faces.push_back(f);
  }
  return out;
}

DeltaSet salvetti(const Arrangement& a, int order) {
  return order_complex(complement_subposet(enumerate_higher_faces(a, order)).poset);
}

Arrangement braid_arrangement(int k) {
  if (k < 2) throw InputError("braid arrangement needs k >= 2");
  const auto n = static_cast<std::size_t>(k);
  std::vector<AffineForm> forms;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      AffineForm f{std::vector<Rational>(n, 0), 0};
      f.coefficients[i] = 1;
      f.coefficients[j] = -1;
      forms.push_back(std::move(f));
    }
  }
  return Arrangement(n, std::move(forms));
}

std::vector<SignValue> sign_vector_at(const Arrangement& a, std::span<const std::vector<Rational>> levels) {
  std::vector<SignValue> out;
  for (const auto& f : a.forms()) {
    SignValue v = 0;
    for (std::size_t j = levels.size(); j-- > 0;) {
      const Rational value = f(levels[j]);
      if (value != 0) {
        v = (value > 0 ? 1 : -1) * static_cast<int>(j + 1);
        break;
      }
    }
    out.push_back(v);
  }
  return out;
}

std::optional<std::vector<std::vector<Rational>>> witness(const Arrangement& a, std::span<const SignValue> values,
                                                          int order, std::mt19937_64* rng) {
  std::vector<std::vector<Rational>> points;
  for (int j = 1; j <= order; ++j) {
    auto p = level_system(a, values, j, values.size()).find_point(rng);
    if (!p) return std::nullopt;
    points.push_back(std::move(*p));
  }
  return points;
}

}  // namespace cellstrat
