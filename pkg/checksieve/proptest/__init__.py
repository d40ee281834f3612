from .types import (TypeDef, NatRange, DigitT, DigitList, BitList, Product, OneOf, IsbnT,
                    Fixed, Bounded, Sized, generate, enumerate_domain)
from .engine import (Property, run_property, run_exhaustive, reevaluate, check_expect,
                     trial_rng, generate_environment, domain_size)
from .report import format_summary, summary_from_json, render_environment, render_value
