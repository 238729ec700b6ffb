"""Spring physics against independent hand calculations and oracles."""
import random
from math import pi, sqrt

import pytest

from stockspring import (CatalogueEntry, GeometryError, RangeError,
                         derive_geometry, length_at_load, load_at_length,
                         mass_and_volumes, stored_energy)
from stockspring.mechanics import (MATERIALS, buckling_length,
                                   fatigue_life_factor, get_material,
                                   min_operating_length, shear_stress,
                                   surge_frequency, wahl_factor)

STEEL = MATERIALS["steel"]
STAINLESS = MATERIALS["stainless"]


def entry(Do, d, L0, R, material="steel", ends="closed_ground", id=1, price=1.0):
    return CatalogueEntry(id, Do, d, L0, R, material, ends, price)


# The six fixed catalogue springs used throughout.
S1 = entry(36.0, 2.5, 50.0, 3.54)
S2 = entry(32.0, 2.2, 25.0, 5.78)
S3 = entry(32.0, 2.2, 32.0, 4.34)
S4 = entry(11.0, 0.9, 100.0, 0.3)
S5 = entry(11.0, 1.0, 100.0, 0.374, material="stainless")


def geom(e):
    return derive_geometry(e, get_material(e.material))


def random_entry(rng):
    while True:
        d = rng.uniform(0.3, 6.0)
        D = d * rng.uniform(4.0, 14.0)
        L0 = D * rng.uniform(2.0, 9.0)
        n = rng.uniform(3.0, 14.0)
        material = rng.choice(("steel", "stainless"))
        R = MATERIALS[material].G * d ** 4 / (8.0 * D ** 3 * n)
        e = entry(D + d, d, L0, R, material=material,
                  ends=rng.choice(("closed", "closed_ground")))
        try:
            derive_geometry(e, MATERIALS[material])
        except GeometryError:
            continue
        return e


class TestDeriveGeometry:
    def test_diameters_by_definition(self):
        g = geom(S1)
        assert g.D == 36.0 - 2.5
        assert g.Di == 36.0 - 5.0
        assert g.C == pytest.approx(33.5 / 2.5, rel=1e-12)

    def test_active_coils_hand_calculation(self):
        # n = G*d^4 / (8*D^3*R) = 81500*0.9^4 / (8*10.1^3*0.3)
        g = geom(S4)
        assert g.n == pytest.approx(21.624809157712168, rel=1e-12)
        assert g.n == pytest.approx(21.6, abs=0.05)

    def test_solid_length_ground_ends(self):
        # closed & ground: nt = n + 2, Ls = nt*d
        g = geom(S2)
        n = 81500 * 2.2 ** 4 / (8 * 29.8 ** 3 * 5.78)
        assert g.nt == pytest.approx(n + 2, rel=1e-12)
        assert g.Ls == pytest.approx((n + 2) * 2.2, rel=1e-12)
        assert g.Ls == pytest.approx(7.832451387535934, rel=1e-12)

    def test_solid_length_unground_ends_one_wire_longer(self):
        ground = geom(S2)
        closed = geom(entry(32.0, 2.2, 25.0, 5.78, ends="closed"))
        assert closed.Ls == pytest.approx(ground.Ls + 2.2, rel=1e-12)

    def test_pitch_closes_the_free_length(self):
        # p = (L0 - Ls)/n + d  =>  n*(p - d) + Ls = L0
        for e in (S1, S2, S3, S4, S5):
            g = geom(e)
            assert g.n * (g.p - e.d) + g.Ls == pytest.approx(e.L0, rel=1e-12)

    def test_rate_rederived_from_coils(self):
        rng = random.Random(42)
        for _ in range(200):
            e = random_entry(rng)
            g = geom(e)
            mat = get_material(e.material)
            r = mat.G * e.d ** 4 / (8 * g.D ** 3 * g.n)
            assert r == pytest.approx(e.R, rel=1e-9)

    def test_inconsistent_entry_rejected(self):
        # Very soft long-wound spring: solid length exceeds free length.
        with pytest.raises(GeometryError):
            derive_geometry(entry(11.0, 0.9, 10.0, 0.01), STEEL)


class TestLoadLine:
    def test_sensor_spring_loads(self):
        assert load_at_length(S4, 30.0) == pytest.approx(21.0, abs=1e-9)
        assert load_at_length(S4, 90.0) == pytest.approx(3.0, abs=1e-9)

    def test_zero_deflection(self):
        assert load_at_length(S4, S4.L0) == 0.0

    def test_stainless_sensor_spring(self):
        assert load_at_length(S5, 32.0) == pytest.approx(25.43, abs=0.005)

    def test_rate_identity(self):
        assert load_at_length(S4, S4.L0 - 1.0) == pytest.approx(S4.R, rel=1e-12)

    def test_inverse_examples(self):
        assert length_at_load(S4, 21.0) == pytest.approx(30.0, abs=1e-9)
        assert length_at_load(S4, 0.0) == S4.L0
        assert length_at_load(S3, 15.02) == pytest.approx(28.54, abs=0.005)

    def test_out_of_range_raises(self):
        with pytest.raises(RangeError):
            load_at_length(S4, S4.L0 + 1.0)
        with pytest.raises(RangeError):
            load_at_length(S4, geom(S4).Ls - 1.0)
        with pytest.raises(RangeError):
            length_at_load(S4, -1.0)
        with pytest.raises(RangeError):
            length_at_load(S4, S4.R * (S4.L0 - geom(S4).Ls) + 1.0)

    def test_round_trip(self):
        rng = random.Random(7)
        for _ in range(300):
            e = random_entry(rng)
            g = geom(e)
            L = rng.uniform(g.Ls, e.L0)
            back = length_at_load(e, load_at_length(e, L, g), g)
            assert back == pytest.approx(L, rel=1e-9)


class TestStoredEnergy:
    def test_sensor_spring_value(self):
        assert stored_energy(S4, 90.0, 30.0) == pytest.approx(720.0, rel=1e-12)

    def test_zero_stroke(self):
        assert stored_energy(S4, 50.0, 50.0) == 0.0

    def test_clamping_pin_value(self):
        assert stored_energy(S3, 28.54, 17.54) == pytest.approx(427.7, abs=0.1)

    def test_trapezoid_oracle(self):
        # Energy equals the area under the load line between the two
        # operating points: (P1 + P2)/2 * (L1 - L2).
        rng = random.Random(11)
        for _ in range(300):
            e = random_entry(rng)
            g = geom(e)
            L2 = rng.uniform(g.Ls, e.L0)
            L1 = rng.uniform(L2, e.L0)
            area = 0.5 * (load_at_length(e, L1, g) + load_at_length(e, L2, g)) * (L1 - L2)
            assert stored_energy(e, L1, L2, g) == pytest.approx(area, rel=1e-9, abs=1e-12)

    def test_bad_ordering_raises(self):
        with pytest.raises(RangeError):
            stored_energy(S4, 30.0, 90.0)


class TestMassAndVolumes:
    def test_envelope_volume_hand_calculation(self):
        e = entry(10.0, 1.0, 120.0, 2.0)
        _, _, vol = mass_and_volumes(e, geom(e), STEEL, 100.0)
        assert vol == pytest.approx(7.854, abs=1e-3)

    def test_zero_length_zero_volume(self):
        e = entry(10.0, 1.0, 120.0, 2.0)
        assert mass_and_volumes(e, geom(e), STEEL, 0.0)[2] == 0.0

    def test_mass_wire_volume_oracle(self):
        # mass = rho * (pi*d^2/4) * (pi*D*nt); hand value for the sensor
        # spring: 3.7435540887278096 g.
        g = geom(S4)
        mass, vol_l0, _ = mass_and_volumes(S4, g, STEEL, 50.0)
        assert mass == pytest.approx(3.7435540887278096, rel=1e-12)
        wire_length = pi * g.D * g.nt
        section = pi * S4.d ** 2 / 4
        assert mass == pytest.approx(7850e-6 * wire_length * section, rel=1e-12)
        assert vol_l0 == pytest.approx(pi * 5.5 ** 2 * 100 / 1000, rel=1e-12)


class TestSurgeFrequency:
    def test_mass_scaling_law(self):
        # Doubling active-coil mass at fixed rate divides f by sqrt(2);
        # stainless has a different rho, so just scale rho via material.
        g = geom(S4)
        f = surge_frequency(S4, g, STEEL)
        doubled = Material_with_rho(STEEL, STEEL.rho * 2)
        assert surge_frequency(S4, g, doubled) == pytest.approx(f / sqrt(2), rel=1e-12)

    def test_hand_value_and_steel_shortcut(self):
        g = geom(S4)
        f = surge_frequency(S4, g, STEEL)
        assert f == pytest.approx(147.94373823762618, rel=1e-12)
        # Classic steel rule of thumb f ~ 3.56e5 * d / (n * D^2) (d, D in
        # mm) should land within 2%.
        shortcut = 3.56e5 * S4.d / (g.n * g.D ** 2)
        assert f == pytest.approx(shortcut, rel=0.02)

    def test_halved_coils_doubles_frequency(self):
        # Same geometry with n/2 active coils carries twice the rate and
        # twice the surge frequency.
        g = geom(S4)
        half = entry(11.0, 0.9, 100.0, S4.R * 2)
        gh = derive_geometry(half, STEEL)
        assert gh.n == pytest.approx(g.n / 2, rel=1e-12)
        assert surge_frequency(half, gh, STEEL) == pytest.approx(
            2 * surge_frequency(S4, g, STEEL), rel=1e-12)


def Material_with_rho(base, rho):
    from dataclasses import replace
    return replace(base, rho=rho)


class TestShearStress:
    def test_zero_load(self):
        assert shear_stress(S4, geom(S4), 0.0) == 0.0

    def test_wahl_factor_at_index_six(self):
        assert wahl_factor(6.0) == pytest.approx(1.2525, rel=1e-12)

    def test_wahl_above_one_and_decreasing(self):
        prev = None
        for i in range(300):
            c = 3.0 + i * 0.1
            k = wahl_factor(c)
            assert k > 1.0
            if prev is not None:
                assert k < prev
            prev = k

    def test_hand_value(self):
        # kw * 8*P*D / (pi*d^3) for the sensor spring at 21 N.
        assert shear_stress(S4, geom(S4), 21.0) == pytest.approx(
            835.8500952934922, rel=1e-12)


class TestFatigueLifeFactor:
    def test_no_stress_is_capped(self):
        f = fatigue_life_factor(S2, geom(S2), STEEL, 0.0, 0.0, 1e6)
        assert f == 1.0e6

    def test_point_on_the_limit_line_scores_one(self):
        # Build P2 (with P1 = 0) that lands exactly on the allowable
        # line: tau_a/tau_a0 + tau_m/tau_allow = 1.
        g = geom(S2)
        per_n = shear_stress(S2, g, 1.0)
        tau_allow = STEEL.shear_allowable(S2.d)
        tau_a0 = STEEL.amplitude_allowable(S2.d, 1e6)
        p2 = 1.0 / (per_n * (0.5 / tau_a0 + 0.5 / tau_allow))
        assert fatigue_life_factor(S2, g, STEEL, 0.0, p2, 1e6) == pytest.approx(1.0, rel=1e-12)

    def test_geometric_construction_oracle(self):
        # Independent construction: intersect the ray through the stress
        # point (tau_m, tau_a) with the segment from (0, tau_a0) to
        # (tau_allow, 0); the factor is the scaling that reaches it.
        g = geom(S2)
        t1 = shear_stress(S2, g, 5.2)
        t2 = shear_stress(S2, g, 60.0)
        tm, ta = (t1 + t2) / 2, (t2 - t1) / 2
        tau_allow = STEEL.shear_allowable(S2.d)
        tau_a0 = STEEL.amplitude_allowable(S2.d, 1e6)
        # Line: x/tau_allow + y/tau_a0 = 1; ray: (t*tm, t*ta).
        t = 1.0 / (tm / tau_allow + ta / tau_a0)
        got = fatigue_life_factor(S2, g, STEEL, 5.2, 60.0, 1e6)
        assert got == pytest.approx(t, rel=1e-12)
        assert got == pytest.approx(1.3347911405979795, rel=1e-12)
        assert got > 1.0

    def test_monotone_in_p2_and_ncycles(self):
        g = geom(S2)
        prev = None
        for p2 in (10.0, 20.0, 40.0, 80.0, 160.0):
            f = fatigue_life_factor(S2, g, STEEL, 5.0, p2, 1e6)
            if prev is not None:
                assert f <= prev
            prev = f
        bands = [fatigue_life_factor(S2, g, STEEL, 5.0, 60.0, n)
                 for n in (1e4, 1e5, 5e5, 1e6, 1e7, 1e9)]
        assert bands == sorted(bands, reverse=True)

    def test_bad_loads_raise(self):
        with pytest.raises(ValueError):
            fatigue_life_factor(S2, geom(S2), STEEL, 10.0, 5.0, 1e6)


class TestBucklingLength:
    def test_squat_spring_cannot_buckle(self):
        e = entry(40.0, 4.0, 40.0, 50.0)  # L0/D ~ 1.1
        assert buckling_length(e, geom(e), STEEL, 1.0) == 0.0

    def test_monotone_in_nu(self):
        e = entry(11.0, 1.0, 80.0, 2.0)
        g = geom(e)
        prev = 0.0
        for nu in (0.4, 0.5, 0.7, 1.0, 1.5, 2.0):
            lk = buckling_length(e, g, STEEL, nu)
            assert lk >= prev - 1e-12
            prev = lk

    def test_slender_spring_hand_value(self):
        # D = 10, L0 = 80 (slenderness 8), nu = 1, steel:
        # c1 = (1 - G/E)/(0.5 + G/E); s_K = 40*(1 - sqrt(1 - (pi/8)^2*c1)).
        e = entry(11.0, 1.0, 80.0, 2.0)
        lk = buckling_length(e, geom(e), STEEL, 1.0)
        c1 = (1 - 81500 / 206000) / (0.5 + 81500 / 206000)
        sk = 40.0 * (1.0 - sqrt(1.0 - (pi * 10.0 / 80.0) ** 2 * c1))
        assert lk == pytest.approx(80.0 - sk, rel=1e-12)
        assert lk == pytest.approx(77.86159764405728, rel=1e-12)

    def test_bad_nu_raises(self):
        with pytest.raises(ValueError):
            buckling_length(S4, geom(S4), STEEL, 0.0)


class TestOperatingFloor:
    def test_ten_percent_reserve(self):
        g = geom(S4)
        floor = min_operating_length(S4, g)
        assert floor == pytest.approx(g.Ls + 0.1 * (100.0 - g.Ls), rel=1e-12)
        assert g.Ls < floor < S4.L0
