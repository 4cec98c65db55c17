#include "forge/semigroup.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <set>

#include "forge/error.hpp"

namespace forge {

namespace {

PropertyCheck scan_associative(const FiniteMagma& m) {
  const auto n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (m.product(m.product(i, j), k) != m.product(i, m.product(j, k))) {
          return {false, {i, j, k}};
        }
      }
    }
  }
  return {};
}

template <typename Mul>
PropertyCheck scan_cancellative(const FiniteMagma& m, Mul mul) {
  const auto n = m.order();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (mul(x, a) == mul(x, b)) {
          return {false, {x, a, b}};
        }
      }
    }
  }
  return {};
}

template <typename Mul>
PropertyCheck scan_ore(const FiniteMagma& m, Mul mul) {
  const auto n = m.order();
  std::vector<char> hit(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      // Common multiples of a and b exist iff the sets {mul(x, a)} and
      // {mul(y, b)} meet.
      std::fill(hit.begin(), hit.end(), 0);
      for (std::size_t x = 0; x < n; ++x) {
        hit[mul(x, a)] = 1;
      }
      bool found = false;
      for (std::size_t y = 0; y < n && !found; ++y) {
        found = hit[mul(y, b)] != 0;
      }
      if (!found) {
        return {false, {a, b}};
      }
    }
  }
  return {};
}

std::vector<std::size_t> inverse_map(const FiniteMagma& m, std::size_t e) {
  const auto n = m.order();
  std::vector<std::size_t> inv(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (m.product(a, b) == e && m.product(b, a) == e) {
        inv[a] = b;
        break;
      }
    }
  }
  return inv;
}

void require_group(const FiniteMagma& m) {
  if (!is_group(m)) {
    throw Error(ErrorCode::not_group, "table is not a group");
  }
}

std::vector<std::size_t> generated_subgroup(const FiniteMagma& m, std::size_t e, const std::set<std::size_t>& gens) {
  // Finite: closure under products is a subgroup.
  std::set<std::size_t> elems{e};
  std::vector<std::size_t> frontier{e};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (const auto a : frontier) {
      for (const auto g : gens) {
        const auto p = m.product(a, g);
        if (elems.insert(p).second) {
          next.push_back(p);
        }
      }
    }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

}  // namespace

std::optional<std::size_t> identity_element(const FiniteMagma& m) {
  const auto n = m.order();
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      ok = m.product(e, a) == a && m.product(a, e) == a;
    }
    if (ok) {
      return e;
    }
  }
  return std::nullopt;
}

bool is_group(const FiniteMagma& m) {
  if (!scan_associative(m).holds) {
    return false;
  }
  const auto e = identity_element(m);
  if (!e) {
    return false;
  }
  const auto inv = inverse_map(m, *e);
  return std::none_of(inv.begin(), inv.end(), [&](std::size_t b) { return b == m.order(); });
}

StructureReport check_structure(const FiniteMagma& m) {
  StructureReport r;
  auto left = [&](std::size_t x, std::size_t a) { return m.product(x, a); };
  auto right = [&](std::size_t x, std::size_t a) { return m.product(a, x); };
  r.associative = scan_associative(m);
  r.left_cancellative = scan_cancellative(m, left);
  r.right_cancellative = scan_cancellative(m, right);
  r.left_ore = scan_ore(m, left);
  r.right_ore = scan_ore(m, right);
  r.identity = identity_element(m);
  r.is_group = is_group(m);
  return r;
}

IdentityCheck holds_identity(const FiniteMagma& m, const Identity& identity, int jobs) {
  if (!scan_associative(m).holds) {
    throw Error(ErrorCode::not_associative, "identities are checked on associative tables only");
  }
  const auto vars = identity.variables().size();
  if (vars > kMaxIdentityVariables) {
    throw Error(ErrorCode::too_many_variables, "identity has " + std::to_string(vars) + " variables (max " +
                                                   std::to_string(kMaxIdentityVariables) + ")");
  }
  const bool needs_inverses = !is_positive(identity.lhs) || !is_positive(identity.rhs);
  std::vector<std::size_t> inv;
  if (needs_inverses) {
    if (!is_group(m)) {
      throw Error(ErrorCode::not_group, "identity uses inverse letters but the table is not a group");
    }
    inv = inverse_map(m, *identity_element(m));
  }

  const auto n = m.order();
  auto evaluate = [&](const Word& w, const std::vector<std::size_t>& assign) {
    std::optional<std::size_t> acc;
    for (const auto l : w.letters()) {
      const auto v = l.positive() ? assign[l.index()] : inv[assign[l.index()]];
      acc = acc ? m.product(*acc, v) : v;
    }
    return *acc;
  };

  // Assignments are split into n chunks by the value of the first variable.
  std::uint64_t chunk_size = 1;
  for (std::size_t i = 1; i < vars; ++i) {
    chunk_size *= n;
  }
  std::vector<std::optional<std::vector<std::size_t>>> failures(n);
  std::atomic<std::size_t> first_bad{n};
  auto scan_chunk = [&](std::size_t head) {
    if (head > first_bad.load()) {
      return;
    }
    std::vector<std::size_t> assign(vars, 0);
    assign[0] = head;
    for (std::uint64_t step = 0; step < chunk_size; ++step) {
      if (evaluate(identity.lhs, assign) != evaluate(identity.rhs, assign)) {
        failures[head] = assign;
        auto current = first_bad.load();
        while (head < current && !first_bad.compare_exchange_weak(current, head)) {
        }
        return;
      }
      for (std::size_t i = vars; i-- > 1;) {
        if (++assign[i] < n) {
          break;
        }
        assign[i] = 0;
      }
    }
  };
  if (jobs <= 1) {
    for (std::size_t head = 0; head < n && first_bad.load() == n; ++head) {
      scan_chunk(head);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pending;
    for (int t = 0; t < jobs; ++t) {
      pending.push_back(std::async(std::launch::async, [&] {
        for (auto head = next++; head < n; head = next++) {
          scan_chunk(head);
        }
      }));
    }
    for (auto& f : pending) {
      f.get();
    }
  }

  IdentityCheck result;
  const auto bad = first_bad.load();
  if (bad == n) {
    result.substitutions = chunk_size * n;
    return result;
  }
  result.holds = false;
  result.counterexample = *failures[bad];
  // Row-major index of the counterexample, plus one.
  std::uint64_t index = 0;
  for (const auto v : result.counterexample) {
    index = index * n + v;
  }
  result.substitutions = index + 1;
  return result;
}

std::optional<int> nilpotency_class(const FiniteMagma& m) {
  require_group(m);
  const auto e = *identity_element(m);
  const auto inv = inverse_map(m, e);
  const auto n = m.order();
  std::vector<std::size_t> current(n);
  for (std::size_t i = 0; i < n; ++i) {
    current[i] = i;
  }
  // current = gamma_{c+1}
  for (int c = 0;; ++c) {
    if (current.size() == 1) {
      return c;
    }
    std::set<std::size_t> commutators;
    for (const auto a : current) {
      for (std::size_t g = 0; g < n; ++g) {
        commutators.insert(m.product(m.product(inv[a], inv[g]), m.product(a, g)));
      }
    }
    auto next = generated_subgroup(m, e, commutators);
    if (next.size() == current.size()) {
      return std::nullopt;
    }
    current = std::move(next);
  }
}

MaltsevReport maltsev_crosscheck(const FiniteMagma& m, int k, int jobs) {
  require_group(m);
  MaltsevReport r;
  r.k = k;
  const auto check = holds_identity(m, maltsev_identity(k), jobs);
  r.identity_holds = check.holds;
  r.counterexample = check.counterexample;
  r.nilpotency = nilpotency_class(m);
  r.class_at_most_k = r.nilpotency.has_value() && *r.nilpotency <= k;
  r.consistent = r.identity_holds == r.class_at_most_k;
  return r;
}

FractionGroup fraction_group_of_finite(const FiniteMagma& m) {
  const auto s = check_structure(m);
  if (!s.associative.holds) {
    throw Error(ErrorCode::not_associative, "table is not associative");
  }
  if (!s.cancellative()) {
    throw Error(ErrorCode::not_cancellative, "table is not cancellative");
  }
  const auto n = m.order();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row(n), col(n);
    for (std::size_t j = 0; j < n; ++j) {
      row[m.product(i, j)] = 1;
      col[m.product(j, i)] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != static_cast<std::ptrdiff_t>(n) ||
        std::count(col.begin(), col.end(), 1) != static_cast<std::ptrdiff_t>(n)) {
      throw Error(ErrorCode::not_cancellative, "row or column " + std::to_string(i) + " is not a permutation");
    }
  }
  const auto e = identity_element(m);
  if (!e) {
    throw Error(ErrorCode::not_group, "internal: cancellative finite semigroup without identity");
  }
  auto inv = inverse_map(m, *e);
  if (std::any_of(inv.begin(), inv.end(), [&](std::size_t b) { return b == n; })) {
    throw Error(ErrorCode::not_group, "internal: element without inverse");
  }
  return FractionGroup{m, *e, std::move(inv)};
}

}  // namespace forge
