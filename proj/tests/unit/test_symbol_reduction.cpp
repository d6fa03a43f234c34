#include <gtest/gtest.h>

#include "primenf/errors.hpp"
#include "primenf/intersection.hpp"
#include "primenf/presentation.hpp"
#include "primenf/symbol_reduction.hpp"

using namespace primenf;

namespace {

// a, b, c = Y3, Y4, Y5 and h acts by the power index.
const Word kGenusThreeSymbol = parse_word(
    "Y:3:1 Y:4:1 Y:5:1 Y:3:0 Y:4:0 Y:5:0 Y:3:1' Y:3:0' Y:4:1' Y:4:0' Y:5:0' Y:5:1'");

const std::vector<Generator> kEdges = {{GenKind::Y, 3, 0}, {GenKind::Y, 3, 1},
                                       {GenKind::Y, 4, 0}, {GenKind::Y, 4, 1},
                                       {GenKind::Y, 5, 0}, {GenKind::Y, 5, 1}};

IntMatrix order_three_action() {
  const auto n3 = nonperm_block(3);
  return block_diagonal({n3, n3, n3});
}

// Dense recomputation from the basis words alone.
IntMatrix dense_from_words(const std::vector<Word>& basis, const std::vector<Generator>& edges,
                           const IntMatrix& m0) {
  const std::size_t n = edges.size();
  IntMatrix v(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const auto col = abelianize(basis[c], edges);
    for (std::size_t i = 0; i < n; ++i) v(i, c) = static_cast<long>(col[i]);
  }
  return v.transpose() * m0 * unimodular_inverse(v).transpose();
}

}  // namespace

TEST(FindLink, Examples) {
  const auto split = find_link(parse_word("Y:3:0 Y:4:0 Y:3:0' Y:4:0'"));
  EXPECT_EQ(split.a, parse_letter("Y:3:0"));
  EXPECT_EQ(split.b, parse_letter("Y:4:0"));
  EXPECT_TRUE(split.w1.empty() && split.w2.empty() && split.w3.empty() && split.w4.empty());

  const auto skip = find_link(parse_word("Y:3:0 Y:5:0 Y:5:0' Y:4:0 Y:3:0' Y:4:0'"));
  EXPECT_EQ(skip.b, parse_letter("Y:4:0"));
  EXPECT_EQ(skip.w1, parse_word("Y:5:0 Y:5:0'"));

  EXPECT_THROW(find_link(parse_word("Y:3:0 Y:3:0' Y:4:0 Y:4:0'")), ValidationError);
  EXPECT_THROW(find_link(parse_word("Y:3:0 Y:4:0")), ValidationError);
}

TEST(FreeReduceSymbol, Examples) {
  EXPECT_EQ(free_reduce_symbol(parse_word("Y:3:0 Y:4:0 Y:5:0 Y:3:0'")), parse_word("Y:4:0 Y:5:0"));
  EXPECT_THROW(free_reduce_symbol(parse_word("Y:3:0 Y:3:0'")), ValidationError);
}

TEST(LinkStep, GenusThreeWalkthrough) {
  auto st = start_reduction({}, order_three_action(), kGenusThreeSymbol, kEdges);

  link_step(st);
  const auto& s1 = st.steps[0];
  EXPECT_EQ(s1.a, parse_letter("Y:3:1"));
  EXPECT_EQ(s1.b, parse_letter("Y:4:1"));
  EXPECT_EQ(s1.w_lengths, (std::array<std::size_t, 4>{0, 4, 1, 3}));
  EXPECT_FALSE(s1.shortcut);
  EXPECT_EQ(st.P, parse_word("Y:3:0' Y:5:1 Y:3:0 Y:4:0 Y:5:0 Y:4:0' Y:5:0' Y:5:1'"));
  // M = hb + hc + a + b + c, N = hc + b + c - ha.
  EXPECT_EQ(s1.m_column, (std::vector<long long>{1, 0, 1, 1, 1, 1}));
  EXPECT_EQ(s1.n_column, (std::vector<long long>{0, -1, 1, 0, 1, 1}));

  link_step(st);
  const auto& s2 = st.steps[1];
  EXPECT_EQ(s2.a, parse_letter("Y:3:0'"));
  EXPECT_EQ(s2.b, parse_letter("Y:5:1"));
  EXPECT_EQ(s2.m_word, parse_word("Y:3:0' Y:5:1 Y:3:0"));
  EXPECT_EQ(s2.n_word, parse_word("Y:4:0 Y:5:0 Y:4:0' Y:5:0' Y:3:0"));
  EXPECT_EQ(s2.m_column, (std::vector<long long>{0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(s2.n_column, (std::vector<long long>{1, 0, 0, 0, 0, 0}));
  EXPECT_EQ(st.P, parse_word("Y:4:0 Y:5:0 Y:4:0' Y:5:0'"));

  link_step(st);
  const auto& s3 = st.steps[2];
  EXPECT_TRUE(s3.shortcut);
  EXPECT_EQ(s3.m_word, parse_word("Y:4:0"));
  EXPECT_EQ(s3.n_word, parse_word("Y:5:0"));
  EXPECT_EQ(s3.changed_columns, 0);
  EXPECT_TRUE(st.P.empty());
}

TEST(LinkStep, SparseUpdatesAgreeWithDenseProducts) {
  for (int p : {2, 3, 5, 7}) {
    for (int g = 2; g <= 10; ++g) {
      for (const auto& raw : enumerate_classes(g, p)) {
        if (raw.t() < 3) continue;
        const auto cls = normalize_class(raw).cls;
        const auto pres = build_presentation(cls);
        const std::size_t off = static_cast<std::size_t>(2 * p * cls.g0);
        const std::vector<Generator> edges(pres.generators.begin() + static_cast<std::ptrdiff_t>(off),
                                           pres.generators.end());
        const auto full = adapted_action_matrix(pres);
        IntMatrix m0(edges.size(), edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i)
          for (std::size_t j = 0; j < edges.size(); ++j) m0(i, j) = full(off + i, off + j);

        auto st = start_reduction(pres.qhat, m0, pres.lrhat, edges);
        while (!st.P.empty()) {
          link_step(st);
          ASSERT_TRUE((st.U * st.U_inv).is_identity());
          ASSERT_EQ(st.M, st.U.transpose() * m0 * st.U_inv.transpose());
          ASSERT_EQ(st.M, dense_from_words(st.basis, edges, m0));
        }
        ASSERT_EQ(st.steps.size(), edges.size() / 2);
      }
    }
  }
}

TEST(LinkStep, FreeReductionIsAnInvariantFailure) {
  const std::vector<Generator> edges = {{GenKind::Y, 3, 0}, {GenKind::Y, 4, 0}};
  auto st = start_reduction({}, IntMatrix::identity(2),
                            parse_word("Y:3:0 Y:3:0' Y:4:0 Y:4:0'"), edges);
  EXPECT_THROW(link_step(st), InvariantError);
  auto unlinked = start_reduction({}, IntMatrix::identity(2),
                                  parse_word("Y:3:0 Y:4:0 Y:4:0 Y:3:0'"), edges);
  EXPECT_THROW(link_step(unlinked), InvariantError);
}

TEST(Tighten, GenusThreeSymbol) {
  const auto m0 = order_three_action();
  const auto res = tighten({}, m0, kGenusThreeSymbol, kEdges);
  ASSERT_EQ(res.steps.size(), 3u);
  // Recomputed independently from the final basis words.
  EXPECT_EQ(res.M_CAN, dense_from_words(res.basis, kEdges, m0));
  EXPECT_EQ(res.M_CAN, (IntMatrix{{0, 1, 0, -1, 0, 0},
                                  {0, -1, 0, 0, 0, -1},
                                  {1, -1, -1, 0, -1, -1},
                                  {1, 0, 0, -1, 0, -1},
                                  {0, 1, 1, -1, 0, 1},
                                  {0, 1, 0, 0, 0, 0}}));
  const auto j = symbol_intersection(kGenusThreeSymbol, kEdges);
  EXPECT_EQ(res.V.transpose() * j * res.V, standard_J(0, 3));
  EXPECT_TRUE(is_symplectic(res.M_CAN, standard_J(0, 3)));
  EXPECT_TRUE(res.M_CAN.pow(3).is_identity());
  EXPECT_EQ(res.M_CAN.trace(), -3);
}

TEST(Tighten, GenusThreeSymbolUsesPrefixLabels) {
  // Reading the prefix-labeled relation backwards flips every pairing; the
  // formula block belongs to the base-coset labels instead.
  const auto cls = normalize_class(validate_class(3, {1, 1, 2, 1, 1}, 0)).cls;
  const auto prefix = build_presentation(cls, Labeling::prefix_coset);
  EXPECT_EQ(symbol_intersection(kGenusThreeSymbol, kEdges), -symbol_intersection(prefix.lrhat, kEdges));
  EXPECT_NE(symbol_intersection(kGenusThreeSymbol, kEdges), pair_block(cls));
  const auto base = build_presentation(cls);
  EXPECT_EQ(symbol_intersection(base.lrhat, kEdges), pair_block(cls));
}

TEST(Tighten, HyperellipticGivesMinusIdentity) {
  for (int t : {6, 8, 10}) {
    const auto cls = validate_class(2, std::vector<int>(static_cast<std::size_t>(t), 1), 0);
    const auto pres = build_presentation(cls);
    const auto res = tighten(pres.qhat, adapted_action_matrix(pres), pres.lrhat, pres.generators);
    EXPECT_EQ(res.M_CAN, -IntMatrix::identity(pres.generators.size()));
  }
}

TEST(Tighten, StandardSymbolIsAlreadyTight) {
  const std::vector<Generator> edges = {{GenKind::Y, 3, 0}, {GenKind::Y, 4, 0},
                                        {GenKind::Y, 5, 0}, {GenKind::Y, 6, 0}};
  const Word w = parse_word("Y:3:0 Y:4:0 Y:3:0' Y:4:0' Y:5:0 Y:6:0 Y:5:0' Y:6:0'");
  const auto res = tighten({}, IntMatrix::identity(4), w, edges);
  EXPECT_EQ(res.steps.size(), 2u);
  for (const auto& s : res.steps) EXPECT_TRUE(s.shortcut);
  EXPECT_EQ(res.V.transpose() * symbol_intersection(w, edges) * res.V, standard_J(0, 2));
  EXPECT_EQ(res.M_CAN, IntMatrix::identity(4));
  EXPECT_EQ(res.Q, w);
}

TEST(Tighten, Rejections) {
  EXPECT_THROW(tighten({}, IntMatrix::identity(2), parse_word("Y:3:0 Y:4:0 Y:3:0'"),
                       {{GenKind::Y, 3, 0}, {GenKind::Y, 4, 0}}),
               ValidationError);
  EXPECT_THROW(start_reduction({}, IntMatrix::identity(3), parse_word("Y:3:0 Y:4:0 Y:3:0' Y:4:0'"),
                               {{GenKind::Y, 3, 0}, {GenKind::Y, 4, 0}}),
               ValidationError);
}
