# Regenerates the synthetic analog scenarios under scenarios/.
# Run from the repository root: python3 tools/make_scenarios.py
import json, math

def rect(x, y, w, h):
    return [[x, y], [x + w, y], [x + w, y + h], [x, y + h]]

def env(alpha, vbar):
    return {"diffusivity_m2_per_s": 1.0, "particle_lifetime_s": 1000.0, "sensor_radius_m": 0.2,
            "sensing_interval_s": 1.0, "wind_direction_deg": alpha, "wind_mean_m_per_s": vbar,
            "wind_sd_m_per_s": 0.2}

def dump(path, sc):
    # One point per line keeps the files readable.
    txt = json.dumps(sc, indent=2)
    import re
    txt = re.sub(r"\[\s+(-?[\d.]+),\s+(-?[\d.]+)\s+\]", r"[\1, \2]", txt)
    open(path, "w").write(txt + "\n")

# Dataset-1 analog: wind 0.28 m/s at 195 deg, source (-298.4, -342.6), M = 45.
src = (-298.4, -342.6)
plume = math.radians(195.0 + 180.0)
ux, uy = math.cos(plume), math.sin(plume)
cx, cy = -uy, ux
sensors = []
for d in (30, 60, 90, 120):
    for k in range(-4, 5):
        sensors.append([round(src[0] + d * ux + k * 15.0 * cx, 1), round(src[1] + d * uy + k * 15.0 * cy, 1)])
for k in range(9):
    sensors.append([-327.5, round(-400.0 + k * 15.0, 1)])
buildings = [rect(-310, -355, 40, 30), rect(-380, -330, 35, 45), rect(-250, -420, 50, 35),
             rect(-340, -250, 30, 40), rect(-220, -300, 30, 25), rect(-200, -220, 45, 30),
             rect(-410, -420, 40, 30), rect(-300, -180, 35, 25)]
dump("scenarios/dataset1_analog.json", {
    "environment": env(195.0, 0.28),
    "prior": {"polygons_m": buildings, "disc": {"mode": "auto", "radius_m": 150.0},
              "gamma_shape": 3.0, "gamma_scale": 7.0},
    "readings_csv": "dataset1_analog_readings.csv",
    "ground_truth": {"x0_m": src[0], "y0_m": src[1], "q0": 21.0, "v_m_per_s": 0.28,
                     "sensor_positions_m": sensors, "seed": 1},
    "inference": {"samples": 5000, "seed": 1},
})

# Dataset-3 analog: wind 0.14 m/s at 150 deg, M = 27 along one road, with two
# mirror-image buildings on either side of the road.
ref = (31.2 + 5.0, -453.2)  # road origin
plume = math.radians(150.0 + 180.0)
ux, uy = math.cos(plume), math.sin(plume)
cx, cy = -uy, ux
def site(along, cross):
    return [round(ref[0] + along * ux + cross * cx, 3), round(ref[1] + along * uy + cross * cy, 3)]
road = [site(10.0 * (k + 1), 0.0) for k in range(27)]
def square(along0, cross0, side):
    return [site(along0, cross0), site(along0 + side, cross0), site(along0 + side, cross0 + side),
            site(along0, cross0 + side)]
left = square(-15.0, 10.0, 30.0)
right = square(-15.0, -40.0, 30.0)
truth = site(-5.0, 22.0)
# Distractors: one straddling the road downstream, one far to the side.
downstream = square(120.0, -12.0, 24.0)
aside = square(20.0, 70.0, 30.0)
dump("scenarios/dataset3_analog.json", {
    "environment": env(150.0, 0.14),
    "prior": {"polygons_m": [left, right, downstream, aside], "disc": {"mode": "auto", "radius_m": 150.0},
              "gamma_shape": 3.0, "gamma_scale": 7.0},
    "readings_csv": "dataset3_analog_readings.csv",
    "ground_truth": {"x0_m": truth[0], "y0_m": truth[1], "q0": 21.0, "v_m_per_s": 0.14,
                     "sensor_positions_m": road, "seed": 1},
    "inference": {"samples": 5000, "seed": 1},
})
