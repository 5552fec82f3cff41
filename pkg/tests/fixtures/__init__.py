from tests.fixtures.panel import *
from tests.fixtures.results import *
