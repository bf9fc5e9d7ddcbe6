// Copyright 2026 The povmcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "povmcoh/io.hpp"
#include "test_util.hpp"

namespace povmcoh {
namespace {

TEST(PovmJson, BitExactRoundTrip) {
    for (std::uint64_t s = 0; s < 20; ++s) {
        const auto p = random_povm(2 + s % 3, 2 + s % 4, s);
        const auto text = to_json(p).dump();
        EXPECT_EQ(povm_from_json(Json::parse(text)), p);
    }
}

TEST(PovmJson, ComplexEntriesArePairs) {
    const auto j = to_json(z_theta_phi({1.0, 0.5}));
    EXPECT_EQ(j["dim"], 2);
    EXPECT_EQ(j["outcomes"], 2);
    EXPECT_TRUE(j["components"][0][0][1].is_array());
    EXPECT_EQ(j["components"][0][0][1].size(), 2u);
}

TEST(PovmJson, MalformedDocuments) {
    EXPECT_THROW(povm_from_json(Json::parse(R"({"components": []})")), FormatError);
    EXPECT_THROW(povm_from_json(Json::parse(R"({"dim": 2, "components": [[[1, 0]]]})")), FormatError);
    EXPECT_THROW(povm_from_json(Json::parse(R"({"dim": 1, "components": [[["x"]]]})")), FormatError);
    EXPECT_THROW(povm_from_json(Json::parse(R"({"dim": 1, "outcomes": 2, "components": [[[[1, 0]]]]})")),
                 FormatError);
}

TEST(ChannelJson, RoundTrip) {
    const auto c = amplitude_damping(3, 0.37);
    const auto back = channel_from_json(Json::parse(to_json(c).dump()));
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t mu = 0; mu < c.size(); ++mu) {
        EXPECT_EQ(back[mu], c[mu]);
    }
    EXPECT_THROW(channel_from_json(Json::parse(R"({"dim": 2})")), FormatError);
}

TEST(CountsJson, RoundTripAndLabels) {
    const auto rec = sample_record(testing::plus_minus(), build_probe_family(2), 64, 3, 1);
    const auto j = to_json(rec);
    EXPECT_TRUE(j["table"].contains("0,1"));
    EXPECT_TRUE(j["table"].contains("1,0"));
    EXPECT_EQ(j["runs"], 3);
    const auto back = record_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back.counts, rec.counts);
    EXPECT_EQ(back.shots, rec.shots);
}

TEST(CountsJson, MissingProbeRowNamed) {
    auto j = to_json(sample_record(testing::plus_minus(), build_probe_family(2), 64, 2, 1));
    j["table"].erase("1,0");
    try {
        record_from_json(j);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError &e) {
        EXPECT_NE(std::string(e.what()).find("(1,0)"), std::string::npos);
    }
}

TEST(CountsJson, RowTotalsChecked) {
    auto j = to_json(sample_record(testing::plus_minus(), build_probe_family(2), 64, 1, 1));
    j["table"]["0,0"][0][0] = 1000;
    EXPECT_THROW(record_from_json(j), ValidationError);
}

TEST(PlotData, CsvShapeAndNan) {
    const PlotTable t{"demo", {"a", "b"}, {{0.5, std::nan("")}, {1.0, 2.0}}};
    EXPECT_EQ(render_plot_data(t, PlotFormat::csv), "a,b\n0.5,\n1,2\n");
}

TEST(PlotData, JsonSchemaVersioned) {
    const PlotTable t{"demo", {"a"}, {{0.1}}};
    const auto j = Json::parse(render_plot_data(t, PlotFormat::json));
    EXPECT_EQ(j["schema"], "povm-coherence/v1");
    EXPECT_EQ(j["columns"][0], "a");
    EXPECT_EQ(j["rows"][0][0].get<double>(), 0.1);
}

TEST(PlotData, EmptyTableRejected) {
    EXPECT_THROW(render_plot_data(PlotTable{"empty", {"a"}, {}}, PlotFormat::csv), std::invalid_argument);
}

TEST(PlotData, UnwritablePath) {
    const PlotTable t{"demo", {"a"}, {{1.0}}};
    EXPECT_THROW(emit_plot_data(t, PlotFormat::csv, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST(PlotData, NumbersRoundTrip) {
    for (double x : {0.1, 1.0 / 3.0, 0.526, 1e-17, 123456.789}) {
        EXPECT_EQ(std::stod(format_number(x)), x);
    }
}

} // namespace
} // namespace povmcoh
