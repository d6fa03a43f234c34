#include "primenf/symbol_reduction.hpp"

#include <map>
#include <string>

#include "primenf/errors.hpp"

namespace primenf {

Word free_reduce_symbol(const Word& symbol) {
  Word out = cyclic_reduce(symbol);
  if (out.empty()) throw ValidationError("symbol reduces to the empty word");
  return out;
}

LinkSplit find_link(const Word& symbol) {
  if (symbol.empty()) throw ValidationError("empty symbol");
  std::map<Letter, std::size_t> pos;
  for (std::size_t i = 0; i < symbol.size(); ++i) pos[symbol[i]] = i;
  auto inverse_at = [&](const Letter& l) {
    auto it = pos.find(l.inverse());
    if (it == pos.end()) {
      throw ValidationError("not a one-vertex surface symbol: " + format_letter(l) +
                            " has no inverse");
    }
    return it->second;
  };
  const std::size_t ai = inverse_at(symbol[0]);
  for (std::size_t i = 1; i < ai; ++i) {
    const std::size_t bi = inverse_at(symbol[i]);
    if (bi > ai) {
      auto slice = [&](std::size_t from, std::size_t to) {
        return Word(symbol.begin() + static_cast<std::ptrdiff_t>(from),
                    symbol.begin() + static_cast<std::ptrdiff_t>(to));
      };
      return {symbol[0],          symbol[i],
              slice(1, i),        slice(i + 1, ai),
              slice(ai + 1, bi),  slice(bi + 1, symbol.size())};
    }
  }
  throw ValidationError("not a one-vertex surface symbol: " + format_letter(symbol[0]) +
                        " is not linked");
}

ReductionState start_reduction(const Word& qhat, const IntMatrix& m0, const Word& lrhat,
                               const std::vector<Generator>& edges) {
  if (m0.rows() != edges.size() || !m0.is_square()) {
    throw ValidationError("action matrix does not match the edge list");
  }
  ReductionState st;
  st.edges = edges;
  st.P = lrhat;
  st.Q = qhat;
  st.M = m0;
  st.U = IntMatrix::identity(edges.size());
  st.U_inv = st.U;
  for (const auto& e : edges) st.basis.push_back({{e, 1}});
  return st;
}

void link_step(ReductionState& st) {
  if (st.P.empty()) throw ValidationError("link_step on an empty symbol");
  if (has_cancellation(st.P, true)) {
    throw InvariantError("symbol-reduction",
                         "free reduction would fire on " + format_word(st.P));
  }
  LinkSplit link;
  try {
    link = find_link(st.P);
  } catch (const ValidationError& e) {
    throw InvariantError("symbol-reduction", e.what());
  }

  StepRecord rec;
  rec.a = link.a;
  rec.b = link.b;
  rec.w_lengths = {link.w1.size(), link.w2.size(), link.w3.size(), link.w4.size()};
  rec.shortcut = link.w1.empty() && link.w2.empty() && link.w3.empty();
  if (rec.shortcut) {
    rec.m_word = {link.a};
    rec.n_word = {link.b};
  } else {
    rec.m_word = concat(concat(Word{link.a}, link.w1), concat(Word{link.b}, link.w2));
    rec.m_word.push_back(link.a.inverse());
    rec.n_word = concat(link.w3, link.w2);
    rec.n_word.push_back(link.a.inverse());
  }
  const auto idx = index_of(st.edges);
  rec.a_slot = idx.at(link.a.gen);
  rec.b_slot = idx.at(link.b.gen);
  rec.m_column = abelianize(rec.m_word, st.edges);
  rec.n_column = abelianize(rec.n_word, st.edges);

  const std::size_t n = st.edges.size();
  const std::size_t sa = rec.a_slot, sb = rec.b_slot;
  const auto& bm = rec.m_column;
  const auto& bn = rec.n_column;

  // B is the identity outside columns sa, sb; its inverse has the same shape.
  const long long k00 = bm[sa], k01 = bn[sa], k10 = bm[sb], k11 = bn[sb];
  const long long det = k00 * k11 - k01 * k10;
  if (det != 1 && det != -1) {
    throw InvariantError("symbol-reduction", "basis change has determinant " +
                                                 std::to_string(det));
  }
  rec.det = static_cast<int>(det);
  const long long i00 = k11 * det, i01 = -k01 * det, i10 = -k10 * det, i11 = k00 * det;
  std::vector<long long> ca(n), cb(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == sa || i == sb) continue;
    ca[i] = -(bm[i] * i00 + bn[i] * i10);
    cb[i] = -(bm[i] * i01 + bn[i] * i11);
  }
  ca[sa] = i00;
  ca[sb] = i10;
  cb[sa] = i01;
  cb[sb] = i11;

  for (std::size_t c : {sa, sb}) {
    const auto& col = c == sa ? bm : bn;
    bool identity_col = true;
    for (std::size_t i = 0; i < n && identity_col; ++i) {
      identity_col = col[i] == (i == c ? 1 : 0);
    }
    rec.changed_columns += identity_col ? 0 : 1;
  }

  // M <- B^T M B^{-T}
  {
    std::vector<Integer> row_a(n), row_b(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (bm[k] != 0) {
        const Integer f = static_cast<long>(bm[k]);
        for (std::size_t j = 0; j < n; ++j)
          mpz_addmul(row_a[j].get_mpz_t(), f.get_mpz_t(), st.M(k, j).get_mpz_t());
      }
      if (bn[k] != 0) {
        const Integer f = static_cast<long>(bn[k]);
        for (std::size_t j = 0; j < n; ++j)
          mpz_addmul(row_b[j].get_mpz_t(), f.get_mpz_t(), st.M(k, j).get_mpz_t());
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      st.M(sa, j) = row_a[j];
      st.M(sb, j) = row_b[j];
    }
    std::vector<Integer> col_a(n), col_b(n);
    for (std::size_t i = 0; i < n; ++i) {
      col_a[i] = st.M(i, sa);
      col_b[i] = st.M(i, sb);
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == sa || j == sb) {
        for (std::size_t i = 0; i < n; ++i) st.M(i, j) = 0;
      }
      if (ca[j] != 0) {
        const Integer f = static_cast<long>(ca[j]);
        for (std::size_t i = 0; i < n; ++i)
          mpz_addmul(st.M(i, j).get_mpz_t(), col_a[i].get_mpz_t(), f.get_mpz_t());
      }
      if (cb[j] != 0) {
        const Integer f = static_cast<long>(cb[j]);
        for (std::size_t i = 0; i < n; ++i)
          mpz_addmul(st.M(i, j).get_mpz_t(), col_b[i].get_mpz_t(), f.get_mpz_t());
      }
    }
  }

  // U <- U B
  {
    std::vector<Integer> new_a(n), new_b(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (bm[k] != 0) {
        const Integer f = static_cast<long>(bm[k]);
        for (std::size_t i = 0; i < n; ++i)
          mpz_addmul(new_a[i].get_mpz_t(), st.U(i, k).get_mpz_t(), f.get_mpz_t());
      }
      if (bn[k] != 0) {
        const Integer f = static_cast<long>(bn[k]);
        for (std::size_t i = 0; i < n; ++i)
          mpz_addmul(new_b[i].get_mpz_t(), st.U(i, k).get_mpz_t(), f.get_mpz_t());
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      st.U(i, sa) = new_a[i];
      st.U(i, sb) = new_b[i];
    }
  }

  // U^{-1} <- B^{-1} U^{-1}
  {
    std::vector<Integer> old_a(n), old_b(n);
    for (std::size_t j = 0; j < n; ++j) {
      old_a[j] = st.U_inv(sa, j);
      old_b[j] = st.U_inv(sb, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == sa || i == sb) {
        for (std::size_t j = 0; j < n; ++j) st.U_inv(i, j) = 0;
      }
      if (ca[i] != 0) {
        const Integer f = static_cast<long>(ca[i]);
        for (std::size_t j = 0; j < n; ++j)
          mpz_addmul(st.U_inv(i, j).get_mpz_t(), f.get_mpz_t(), old_a[j].get_mpz_t());
      }
      if (cb[i] != 0) {
        const Integer f = static_cast<long>(cb[i]);
        for (std::size_t j = 0; j < n; ++j)
          mpz_addmul(st.U_inv(i, j).get_mpz_t(), f.get_mpz_t(), old_b[j].get_mpz_t());
      }
    }
  }

  st.basis[sa] = rec.m_word;
  st.basis[sb] = rec.n_word;
  st.a_slots.push_back(sa);
  st.b_slots.push_back(sb);
  st.pairs.emplace_back(rec.m_word, rec.n_word);
  const Word comm = commutator(rec.m_word, rec.n_word);
  st.Q.insert(st.Q.end(), comm.begin(), comm.end());
  st.P = concat(concat(link.w3, link.w2), concat(link.w1, link.w4));
  st.steps.push_back(std::move(rec));
}

TightenResult tighten(const Word& qhat, const IntMatrix& m0, const Word& lrhat,
                      const std::vector<Generator>& edges) {
  if (lrhat.size() % 4 != 0) {
    throw ValidationError("symbol length " + std::to_string(lrhat.size()) +
                          " is not divisible by 4");
  }
  const std::size_t q = lrhat.size() / 4;
  ReductionState st = start_reduction(qhat, m0, lrhat, edges);
  while (!st.P.empty()) {
    if (st.steps.size() >= q) {
      throw InvariantError("symbol-reduction", "iteration bound exceeded");
    }
    const std::size_t before = st.P.size();
    link_step(st);
    if (st.P.size() + 4 != before) {
      throw InvariantError("symbol-reduction", "a step did not remove 4 letters");
    }
  }
  if (st.a_slots.size() * 2 != edges.size()) {
    throw InvariantError("symbol-reduction", "reduction did not consume every edge");
  }

  std::vector<std::size_t> order = st.a_slots;
  order.insert(order.end(), st.b_slots.begin(), st.b_slots.end());
  TightenResult out;
  out.Q = std::move(st.Q);
  out.M_CAN = st.M.permuted(order);
  const std::size_t n = edges.size();
  out.V = IntMatrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) out.V(i, c) = st.U(i, order[c]);
    out.basis.push_back(st.basis[order[c]]);
  }
  out.pairs = std::move(st.pairs);
  out.steps = std::move(st.steps);
  return out;
}

}  // namespace primenf
