from src.suites.characters_suite import CharactersSuite
from src.suites.gaussian_suite import GaussianAveragesSuite
from src.suites.hurwitz_suite import HurwitzOracleSuite
from src.suites.normal_suite import NormalModelSuite
from src.suites.prop1_suite import Prop1Suite
from src.suites.series_suite import SeriesCalibrationSuite
from src.suites.weingarten_suite import WeingartenSuite

# Name -> suite class, in the order reports list them.
SUITES = {
    "characters": CharactersSuite,
    "hurwitz-vs-oracle": HurwitzOracleSuite,
    "weingarten": WeingartenSuite,
    "prop1-mc": Prop1Suite,
    "series-calibration": SeriesCalibrationSuite,
    "normal-model": NormalModelSuite,
    "gaussian-averages": GaussianAveragesSuite,
}
