import os
from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Settings:
    """
    Run configuration shared by the command line front end and the harness.

    Attributes:
        jobs: number of worker processes; -1 uses all cores
        seed: seed of sampled property suites
        deep: unlock generation of 13 and 14 vertex triangulations
        debug_level: logging verbosity, see :func:`planturan.log.setup`
        log_filename: log destination
        progress_every: log a progress line after this many graphs
        n_cap: largest order accepted without the unbounded flag
    """
    jobs: int = 1
    seed: int = 0
    deep: bool = False
    debug_level: int = 3
    log_filename: str = 'stderr'
    progress_every: int = 1000
    n_cap: int = 14

    @classmethod
    def from_env(cls, base=None):
        """Apply PLANTURAN_JOBS / PLANTURAN_DEEP on top of ``base``"""
        settings = base or cls()
        jobs = os.environ.get('PLANTURAN_JOBS')
        if jobs:
            settings = replace(settings, jobs=int(jobs))
        deep = os.environ.get('PLANTURAN_DEEP')
        if deep:
            settings = replace(settings, deep=deep.lower() in ('1', 'true', 'yes'))
        return settings

    @classmethod
    def from_args(cls, args):
        """Build from an argparse namespace; flags not given fall back to the environment"""
        settings = cls.from_env()
        values = {}
        for name in ('jobs', 'seed', 'debug_level', 'log_filename'):
            value = getattr(args, name, None)
            if value is not None:
                values[name] = value
        if getattr(args, 'deep', False):
            values['deep'] = True
        return replace(settings, **values)
