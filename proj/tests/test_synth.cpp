#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <set>

#include "stonepore/error.hpp"
#include "stonepore/synth.hpp"

using namespace stonepore;

TEST_CASE("textures are deterministic in the seed") {
    for (const TextureKind kind : {TextureKind::kPeriodic, TextureKind::kBlotchy}) {
        const GrayImage a = synth_texture(kind, 64, 48, 42);
        const GrayImage b = synth_texture(kind, 64, 48, 42);
        CHECK(a.data() == b.data());
        const GrayImage c = synth_texture(kind, 64, 48, 43);
        CHECK(a.data() != c.data());
    }
}

TEST_CASE("periodic texture uses the eight sawtooth levels") {
    for (const std::uint64_t seed : {0ull, 3ull, 9ull, 14ull}) {
        const GrayImage img = synth_texture(TextureKind::kPeriodic, 64, 64, seed);
        std::set<double> levels(img.data().begin(), img.data().end());
        CHECK(levels.size() == 8);
        for (int k = 0; k < 8; ++k) {
            CHECK(levels.count(100.0 + 10.0 * k) == 1);
        }
        // Constant along one diagonal (which one depends on the seed),
        // period 8 along each row, and every length-8 run covers all
        // eight levels exactly once.
        const bool main_diag = img.at(1, 1) == img.at(0, 0);
        for (int y = 0; y < 63; ++y) {
            for (int x = 0; x < 63; ++x) {
                if (main_diag) {
                    CHECK(img.at(y + 1, x + 1) == img.at(y, x));
                } else {
                    CHECK(img.at(y + 1, x) == img.at(y, x + 1));
                }
                if (x + 8 < 64) {
                    CHECK(img.at(y, x + 8) == img.at(y, x));
                }
            }
        }
        const std::set<double> run{img.at(0, 0), img.at(0, 1), img.at(0, 2),
                                   img.at(0, 3), img.at(0, 4), img.at(0, 5),
                                   img.at(0, 6), img.at(0, 7)};
        CHECK(run.size() == 8);
    }
}

TEST_CASE("blotchy texture stays integral and mid-range") {
    const GrayImage img = synth_texture(TextureKind::kBlotchy, 96, 80, 11);
    for (const double v : img.data()) {
        CHECK(v == std::round(v));
        CHECK(v >= 128.0 - 46.0);
        CHECK(v <= 128.0 + 46.0);
    }
    // Neighboring samples move slowly: lattice amplitude spread over a
    // 16-pixel cell.
    for (int y = 0; y < 80; ++y) {
        for (int x = 0; x + 1 < 96; ++x) {
            CHECK(std::abs(img.at(y, x + 1) - img.at(y, x)) <= 12.0);
        }
    }
}

TEST_CASE("texture dimension validation") {
    CHECK_THROWS_AS(synth_texture(TextureKind::kPeriodic, 0, 10, 1), DomainError);
    CHECK_THROWS_AS(synth_texture(TextureKind::kBlotchy, 10, -1, 1), DomainError);
}

TEST_CASE("injected pores match their rasterized truth") {
    const GrayImage texture = synth_texture(TextureKind::kPeriodic, 256, 256, 5);
    PoreSpec spec;
    spec.count = 4;
    spec.contrast = 40.0;
    const SynthResult result = inject_pores(texture, spec, 77);

    REQUIRE(result.pores.size() == 4);
    long expected = 0;
    for (const Pore& p : result.pores) {
        CHECK(p.radius >= spec.min_radius);
        CHECK(p.radius < spec.max_radius);
        expected += disc_pixel_count(p.row, p.col, p.radius, 256, 256);
    }
    CHECK(result.truth.set_pixel_count() == expected);

    // Pixel level inside every disc is darkest - contrast; the texture
    // floor is 100, so pores sit at exactly 60.
    long recount = 0;
    for (int r = 0; r < 256; ++r) {
        for (int c = 0; c < 256; ++c) {
            if (result.truth.at(r, c)) {
                ++recount;
                CHECK(result.image.at(r, c) == 60.0);
            } else {
                CHECK(result.image.at(r, c) == texture.at(r, c));
            }
        }
    }
    CHECK(recount == expected);
}

TEST_CASE("pores keep their separation gap") {
    const GrayImage texture = synth_texture(TextureKind::kBlotchy, 400, 400, 1);
    PoreSpec spec;
    spec.count = 8;
    const SynthResult result = inject_pores(texture, spec, 9);
    REQUIRE(result.pores.size() == 8);
    for (std::size_t i = 0; i < result.pores.size(); ++i) {
        for (std::size_t j = i + 1; j < result.pores.size(); ++j) {
            const Pore& a = result.pores[i];
            const Pore& b = result.pores[j];
            const double dist = std::hypot(a.row - b.row, a.col - b.col);
            CHECK(dist >= a.radius + b.radius + 8.0);
        }
    }
    // All discs stay inside the frame.
    for (const Pore& p : result.pores) {
        CHECK(p.row - p.radius >= 0.0);
        CHECK(p.row + p.radius <= 399.0);
        CHECK(p.col - p.radius >= 0.0);
        CHECK(p.col + p.radius <= 399.0);
    }
}

TEST_CASE("pore injection is deterministic") {
    const GrayImage texture = synth_texture(TextureKind::kPeriodic, 128, 128, 2);
    PoreSpec spec;
    spec.count = 2;
    const SynthResult a = inject_pores(texture, spec, 123);
    const SynthResult b = inject_pores(texture, spec, 123);
    CHECK(a.image.data() == b.image.data());
    CHECK(a.truth.mask == b.truth.mask);
}

TEST_CASE("zero pores leave the texture untouched") {
    const GrayImage texture = synth_texture(TextureKind::kBlotchy, 64, 64, 6);
    PoreSpec spec;
    spec.count = 0;
    const SynthResult result = inject_pores(texture, spec, 1);
    CHECK(result.truth.set_pixel_count() == 0);
    CHECK(result.image.data() == texture.data());
}

TEST_CASE("impossible pore layouts are rejected") {
    const GrayImage small = synth_texture(TextureKind::kPeriodic, 32, 32, 1);
    PoreSpec too_big;
    too_big.count = 1;
    too_big.min_radius = 30.0;
    too_big.max_radius = 30.0;
    CHECK_THROWS_AS(inject_pores(small, too_big, 1), DomainError);

    PoreSpec too_many;
    too_many.count = 50; // cannot keep 50 discs of radius >= 10 apart in 128px
    const GrayImage medium = synth_texture(TextureKind::kPeriodic, 128, 128, 1);
    CHECK_THROWS_AS(inject_pores(medium, too_many, 1), DomainError);

    PoreSpec bad;
    bad.min_radius = 0.0;
    CHECK_THROWS_AS(inject_pores(small, bad, 1), DomainError);
    bad.min_radius = 5.0;
    bad.max_radius = 4.0;
    CHECK_THROWS_AS(inject_pores(small, bad, 1), DomainError);
    bad.max_radius = 6.0;
    bad.contrast = 0.0;
    CHECK_THROWS_AS(inject_pores(small, bad, 1), DomainError);
}

TEST_CASE("gain ramp scales columns linearly") {
    const GrayImage img = GrayImage::filled(11, 4, 100.0);
    const GrayImage ramped = apply_gain_ramp(img, 0.6, 1.4);
    CHECK(ramped.at(0, 0) == 60.0);
    CHECK(ramped.at(3, 10) == 140.0);
    CHECK(ramped.at(2, 5) == 100.0); // midpoint gain 1.0
    for (int x = 0; x < 11; ++x) {
        const double gain = 0.6 + 0.8 * x / 10.0;
        CHECK(ramped.at(1, x) == std::round(100.0 * gain));
    }

    CHECK_THROWS_AS(apply_gain_ramp(img, 0.0, 1.0), DomainError);
    CHECK_THROWS_AS(apply_gain_ramp(img, 1.0, -0.5), DomainError);
}
