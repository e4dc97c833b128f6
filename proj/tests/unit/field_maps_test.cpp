/*
 * Copyright 2026 The cppforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <random>

#include "cppforge/construct.hpp"
#include "cppforge/field_maps.hpp"

using namespace cppforge;

TEST(FieldMaps, TraceAndNormOfF4OverF2)
{
    auto f4 = make_field(2, 2);
    EXPECT_EQ(rel_trace(*f4, 2), 1u);
    EXPECT_EQ(rel_trace(*f4, 0), 0u);
    EXPECT_EQ(rel_norm(*f4, 2), 1u);
    EXPECT_EQ(rel_norm(*f4, 1), 1u);
    auto kernel = trace_kernel(f4);
    ASSERT_EQ(kernel.size(), 2u);
    EXPECT_EQ(kernel[0].code(), 0u);
    EXPECT_EQ(kernel[1].code(), 1u);
}

TEST(FieldMaps, F64OverF4Fibres)
{
    auto f64 = make_tower(2, 2, 3);
    std::vector<int> trace_hits(4), norm_hits(4);
    for (Code x = 0; x < 64; ++x) {
        ++trace_hits[rel_trace(*f64, x)];
        if (x != 0) {
            ++norm_hits[rel_norm(*f64, x)];
        }
    }
    EXPECT_EQ(trace_hits, (std::vector<int>{16, 16, 16, 16}));
    EXPECT_EQ(norm_hits, (std::vector<int>{0, 21, 21, 21}));
    EXPECT_EQ(trace_kernel(f64).size(), 16u);
    EXPECT_EQ(norm_exponent(*f64), 21u);
}

TEST(FieldMaps, BaseFieldInKernelWhenCharacteristicDividesDegree)
{
    auto f16 = make_tower(2, 2, 2);
    for (Code a = 0; a < 4; ++a) {
        EXPECT_EQ(rel_trace(*f16, a), 0u);
    }
}

TEST(FieldMaps, TablesMatchDirectMaps)
{
    auto tower = make_tower(3, 1, 3);
    TowerMaps maps(tower);
    for (Code x = 0; x < tower->order(); ++x) {
        EXPECT_EQ(maps.trace()[x], rel_trace(*tower, x));
        EXPECT_EQ(maps.norm()[x], rel_norm(*tower, x));
    }
    EXPECT_EQ(rel_trace(Element(tower, 5)).home(), tower->base());
}

TEST(FieldMaps, PPolyEvaluation)
{
    auto f64 = make_tower(2, 2, 3);
    auto square = PPoly::frobenius_power(f64, 1);
    PPoly mixed(f64, {{1, 1}, {0, 2}});
    std::mt19937 rng(1);
    std::uniform_int_distribution<Code> pick(0, 63);
    for (Code x = 0; x < 64; ++x) {
        EXPECT_EQ(square.eval(x), f64->mul(x, x));
    }
    EXPECT_EQ(mixed.eval(0), 0u);
    for (int i = 0; i < 200; ++i) {
        const Code x = pick(rng), y = pick(rng);
        EXPECT_EQ(mixed.eval(f64->add(x, y)), f64->add(mixed.eval(x), mixed.eval(y)));
    }
}

TEST(FieldMaps, PPolyQuotient)
{
    auto f64 = make_tower(2, 2, 3);
    EXPECT_EQ(PPoly::frobenius_power(f64, 1).quotient(), Poly(f64, {0, 1}));
    EXPECT_EQ(PPoly(f64, {{0, 3}}).quotient(), Poly(f64, {3}));
    PPoly L(f64, {{0, 1}, {2, 2}, {5, 3}});
    const Poly x(f64, {0, 1});
    const Poly A = L.quotient();
    for (Code v = 0; v < 64; ++v) {
        EXPECT_EQ((x * A).eval(v), L.eval(v));
        EXPECT_EQ(L.quotient_at(v), A.eval(v));
    }
}

TEST(FieldMaps, PPolyValidation)
{
    auto f64 = make_tower(2, 2, 3);
    EXPECT_THROW(PPoly(f64, {{6, 1}}), Error);
    EXPECT_THROW(PPoly(f64, {{0, 4}}), Error);
    EXPECT_THROW(PPoly(f64, {{0, 0}}), Error);
    EXPECT_TRUE(PPoly(f64, {{0, 1}, {1, 2}}).strict_form());
    EXPECT_FALSE(PPoly(f64, {{3, 1}}).strict_form());
}

TEST(FieldMaps, KernelPermutations)
{
    auto f64 = make_tower(2, 2, 3);
    auto f16 = make_tower(2, 2, 2);
    EXPECT_TRUE(ppoly_permutes_kernel(PPoly(f64, {{0, 1}}), 0));
    // x^2 + x on F_16 / F_4 sends 0 and 1 to 0.
    EXPECT_FALSE(ppoly_permutes_kernel(PPoly::frobenius_power(f16, 1), 1));
    for (Code c = 1; c < 4; ++c) {
        EXPECT_TRUE(ppoly_permutes_kernel(PPoly::frobenius_power(f64, 1), c));
    }
    // Theta outside F_q can move kernel elements out of the kernel.
    try {
        ppoly_permutes_kernel(PPoly(f64, {{0, 1}}), 5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::MapEscapesKernel);
    }
}

TEST(FieldMaps, KernelCriterionExamples)
{
    auto f64 = make_tower(2, 2, 3);
    auto f16 = make_tower(2, 2, 2);
    auto v = binomial_kernel_criterion(1, 2, f64);
    EXPECT_EQ(v.case_applied, KernelCase::Case1);
    EXPECT_EQ(v.predicted, true);
    EXPECT_EQ(v.d, 1u);

    v = binomial_kernel_criterion(1, 1, f16);
    EXPECT_EQ(v.case_applied, KernelCase::NoCaseApplies);
    EXPECT_FALSE(v.predicted.has_value());

    v = binomial_kernel_criterion(1, 0, f64);
    EXPECT_EQ(v.predicted, true);

    try {
        binomial_kernel_criterion(2, 1, f16);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PreconditionViolated);
        EXPECT_EQ(e.detail(), "gcd(k, n) = 1");
    }
}
