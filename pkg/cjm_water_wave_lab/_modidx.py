# Autogenerated by nbdev

d = { 'settings': { 'branch': 'main',
                'doc_baseurl': '/cjm-water-wave-lab',
                'doc_host': 'https://cj-mills.github.io',
                'git_url': 'https://github.com/cj-mills/cjm-water-wave-lab',
                'lib_path': 'cjm_water_wave_lab'},
  'syms': {
            'cjm_water_wave_lab.core.config': {
                'cjm_water_wave_lab.core.config.ExperimentConfig': ('core/config.html#experimentconfig', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.ExperimentConfig.is_lifespan': ('core/config.html#experimentconfig.is_lifespan', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.ExperimentConfig.resolved_horizon': ('core/config.html#experimentconfig.resolved_horizon', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.ExperimentConfig.resolved_dt': ('core/config.html#experimentconfig.resolved_dt', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.config_schema': ('core/config.html#config_schema', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config._is_half_integer_multiple': ('core/config.html#_is_half_integer_multiple', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.check_constraints': ('core/config.html#check_constraints', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.config_from_mapping': ('core/config.html#config_from_mapping', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.load_config': ('core/config.html#load_config', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.smoke_config': ('core/config.html#smoke_config', 'cjm_water_wave_lab/core/config.py'),
                'cjm_water_wave_lab.core.config.config_echo': ('core/config.html#config_echo', 'cjm_water_wave_lab/core/config.py'),
            },
            'cjm_water_wave_lab.core.dataclass': {
                'cjm_water_wave_lab.core.dataclass._python_type_to_json_type': ('core/dataclass.html#_python_type_to_json_type', 'cjm_water_wave_lab/core/dataclass.py'),
                'cjm_water_wave_lab.core.dataclass.dataclass_to_jsonschema': ('core/dataclass.html#dataclass_to_jsonschema', 'cjm_water_wave_lab/core/dataclass.py'),
            },
            'cjm_water_wave_lab.core.errors': {
                'cjm_water_wave_lab.core.errors.WaterWaveLabError': ('core/errors.html#waterwavelaberror', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.RejectedInputError': ('core/errors.html#rejectedinputerror', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.SteepnessError': ('core/errors.html#steepnesserror', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.SteepnessError.__init__': ('core/errors.html#steepnesserror.__init__', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.WrapContaminationError': ('core/errors.html#wrapcontaminationerror', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.ConfigError': ('core/errors.html#configerror', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.ConfigError.__init__': ('core/errors.html#configerror.__init__', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.SolverDivergenceError': ('core/errors.html#solverdivergenceerror', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.SolverDivergenceError.__init__': ('core/errors.html#solverdivergenceerror.__init__', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.BlowUpSignal': ('core/errors.html#blowupsignal', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.BlowUpSignal.__init__': ('core/errors.html#blowupsignal.__init__', 'cjm_water_wave_lab/core/errors.py'),
                'cjm_water_wave_lab.core.errors.NormalFormConsistencyError': ('core/errors.html#normalformconsistencyerror', 'cjm_water_wave_lab/core/errors.py'),
            },
            'cjm_water_wave_lab.core.parser': {
                'cjm_water_wave_lab.core.parser.SchemaParser': ('core/parser.html#schemaparser', 'cjm_water_wave_lab/core/parser.py'),
                'cjm_water_wave_lab.core.parser.SchemaParser.__init__': ('core/parser.html#schemaparser.__init__', 'cjm_water_wave_lab/core/parser.py'),
                'cjm_water_wave_lab.core.parser.SchemaParser.get_property': ('core/parser.html#schemaparser.get_property', 'cjm_water_wave_lab/core/parser.py'),
                'cjm_water_wave_lab.core.parser.SchemaParser.defaults': ('core/parser.html#schemaparser.defaults', 'cjm_water_wave_lab/core/parser.py'),
                'cjm_water_wave_lab.core.parser.SchemaParser.parse_text': ('core/parser.html#schemaparser.parse_text', 'cjm_water_wave_lab/core/parser.py'),
            },
            'cjm_water_wave_lab.core.records': {
                'cjm_water_wave_lab.core.records.format_number': ('core/records.html#format_number', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records.write_rows_csv': ('core/records.html#write_rows_csv', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records._jsonable': ('core/records.html#_jsonable', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records.write_json': ('core/records.html#write_json', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records.RunRecord': ('core/records.html#runrecord', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records.RunRecord.note_growth': ('core/records.html#runrecord.note_growth', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records.RunRecord.write_csv': ('core/records.html#runrecord.write_csv', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records.RunRecord.summary': ('core/records.html#runrecord.summary', 'cjm_water_wave_lab/core/records.py'),
                'cjm_water_wave_lab.core.records.run_directory': ('core/records.html#run_directory', 'cjm_water_wave_lab/core/records.py'),
            },
            'cjm_water_wave_lab.core.types': {
                'cjm_water_wave_lab.core.types.SchemaProperty': ('core/types.html#schemaproperty', 'cjm_water_wave_lab/core/types.py'),
                'cjm_water_wave_lab.core.types.SchemaProperty.type': ('core/types.html#schemaproperty.type', 'cjm_water_wave_lab/core/types.py'),
                'cjm_water_wave_lab.core.types.SchemaProperty.is_nullable': ('core/types.html#schemaproperty.is_nullable', 'cjm_water_wave_lab/core/types.py'),
                'cjm_water_wave_lab.core.types.SchemaProperty.item_type': ('core/types.html#schemaproperty.item_type', 'cjm_water_wave_lab/core/types.py'),
                'cjm_water_wave_lab.core.types.SchemaProperty.default': ('core/types.html#schemaproperty.default', 'cjm_water_wave_lab/core/types.py'),
                'cjm_water_wave_lab.core.types.SchemaProperty._coerce_scalar': ('core/types.html#schemaproperty._coerce_scalar', 'cjm_water_wave_lab/core/types.py'),
                'cjm_water_wave_lab.core.types.SchemaProperty.coerce': ('core/types.html#schemaproperty.coerce', 'cjm_water_wave_lab/core/types.py'),
            },
            'cjm_water_wave_lab.diagnostics.drift': {
                'cjm_water_wave_lab.diagnostics.drift.DriftFit': ('diagnostics/drift.html#driftfit', 'cjm_water_wave_lab/diagnostics/drift.py'),
                'cjm_water_wave_lab.diagnostics.drift.DriftFit.passes': ('diagnostics/drift.html#driftfit.passes', 'cjm_water_wave_lab/diagnostics/drift.py'),
                'cjm_water_wave_lab.diagnostics.drift.drift_rate': ('diagnostics/drift.html#drift_rate', 'cjm_water_wave_lab/diagnostics/drift.py'),
                'cjm_water_wave_lab.diagnostics.drift._drift_member': ('diagnostics/drift.html#_drift_member', 'cjm_water_wave_lab/diagnostics/drift.py'),
                'cjm_water_wave_lab.diagnostics.drift.quartic_drift_check': ('diagnostics/drift.html#quartic_drift_check', 'cjm_water_wave_lab/diagnostics/drift.py'),
            },
            'cjm_water_wave_lab.diagnostics.functionals': {
                'cjm_water_wave_lab.diagnostics.functionals.DiagnosticsSettings': ('diagnostics/functionals.html#diagnosticssettings', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.DiagnosticsSettings.decomposition': ('diagnostics/functionals.html#diagnosticssettings.decomposition', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.complex_variable': ('diagnostics/functionals.html#complex_variable', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.state_from_complex': ('diagnostics/functionals.html#state_from_complex', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.good_unknown': ('diagnostics/functionals.html#good_unknown', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.energy': ('diagnostics/functionals.html#energy', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.sobolev_energy': ('diagnostics/functionals.html#sobolev_energy', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.quadratic_sobolev_energy': ('diagnostics/functionals.html#quadratic_sobolev_energy', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.DiagnosticsRecord': ('diagnostics/functionals.html#diagnosticsrecord', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.DiagnosticsTracker': ('diagnostics/functionals.html#diagnosticstracker', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.DiagnosticsTracker.__init__': ('diagnostics/functionals.html#diagnosticstracker.__init__', 'cjm_water_wave_lab/diagnostics/functionals.py'),
                'cjm_water_wave_lab.diagnostics.functionals.DiagnosticsTracker.__call__': ('diagnostics/functionals.html#diagnosticstracker.__call__', 'cjm_water_wave_lab/diagnostics/functionals.py'),
            },
            'cjm_water_wave_lab.diagnostics.spacetime': {
                'cjm_water_wave_lab.diagnostics.spacetime._as_trace': ('diagnostics/spacetime.html#_as_trace', 'cjm_water_wave_lab/diagnostics/spacetime.py'),
                'cjm_water_wave_lab.diagnostics.spacetime.spacetime_accumulate': ('diagnostics/spacetime.html#spacetime_accumulate', 'cjm_water_wave_lab/diagnostics/spacetime.py'),
                'cjm_water_wave_lab.diagnostics.spacetime.holder_l2_bound': ('diagnostics/spacetime.html#holder_l2_bound', 'cjm_water_wave_lab/diagnostics/spacetime.py'),
            },
            'cjm_water_wave_lab.dtn.bench': {
                'cjm_water_wave_lab.dtn.bench.BenchSettings': ('dtn/bench.html#benchsettings', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.RatioStats': ('dtn/bench.html#ratiostats', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.RatioStats.max': ('dtn/bench.html#ratiostats.max', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.RatioStats.median': ('dtn/bench.html#ratiostats.median', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.RatioStats.finite': ('dtn/bench.html#ratiostats.finite', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.RatioStats.stable': ('dtn/bench.html#ratiostats.stable', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.RatioStats.summary': ('dtn/bench.html#ratiostats.summary', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench._ratio': ('dtn/bench.html#_ratio', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.measure_ratios': ('dtn/bench.html#measure_ratios', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench._bench_member': ('dtn/bench.html#_bench_member', 'cjm_water_wave_lab/dtn/bench.py'),
                'cjm_water_wave_lab.dtn.bench.inequality_bench': ('dtn/bench.html#inequality_bench', 'cjm_water_wave_lab/dtn/bench.py'),
            },
            'cjm_water_wave_lab.dtn.oracle': {
                'cjm_water_wave_lab.dtn.oracle.OracleSettings': ('dtn/oracle.html#oraclesettings', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle.OracleSettings.__post_init__': ('dtn/oracle.html#oraclesettings.__post_init__', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._chebyshev_levels': ('dtn/oracle.html#_chebyshev_levels', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._stretched_levels': ('dtn/oracle.html#_stretched_levels', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem': ('dtn/oracle.html#_stripproblem', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem.__init__': ('dtn/oracle.html#_stripproblem.__init__', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem._dx': ('dtn/oracle.html#_stripproblem._dx', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem._abs_dx': ('dtn/oracle.html#_stripproblem._abs_dx', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem.apply': ('dtn/oracle.html#_stripproblem.apply', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem.source': ('dtn/oracle.html#_stripproblem.source', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem.preconditioner': ('dtn/oracle.html#_stripproblem.preconditioner', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._StripProblem.surface_derivative': ('dtn/oracle.html#_stripproblem.surface_derivative', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle._solve_once': ('dtn/oracle.html#_solve_once', 'cjm_water_wave_lab/dtn/oracle.py'),
                'cjm_water_wave_lab.dtn.oracle.dtn_elliptic_oracle': ('dtn/oracle.html#dtn_elliptic_oracle', 'cjm_water_wave_lab/dtn/oracle.py'),
            },
            'cjm_water_wave_lab.dtn.series': {
                'cjm_water_wave_lab.dtn.series.steepness': ('dtn/series.html#steepness', 'cjm_water_wave_lab/dtn/series.py'),
                'cjm_water_wave_lab.dtn.series.dtn_terms': ('dtn/series.html#dtn_terms', 'cjm_water_wave_lab/dtn/series.py'),
                'cjm_water_wave_lab.dtn.series.dtn_series': ('dtn/series.html#dtn_series', 'cjm_water_wave_lab/dtn/series.py'),
                'cjm_water_wave_lab.dtn.series.b3_remainder': ('dtn/series.html#b3_remainder', 'cjm_water_wave_lab/dtn/series.py'),
            },
            'cjm_water_wave_lab.dtn.state': {
                'cjm_water_wave_lab.dtn.state.WaveState': ('dtn/state.html#wavestate', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.__post_init__': ('dtn/state.html#wavestate.__post_init__', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.grid': ('dtn/state.html#wavestate.grid', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.zeros': ('dtn/state.html#wavestate.zeros', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.from_values': ('dtn/state.html#wavestate.from_values', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.scaled': ('dtn/state.html#wavestate.scaled', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.at': ('dtn/state.html#wavestate.at', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.reversed': ('dtn/state.html#wavestate.reversed', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.WaveState.is_finite': ('dtn/state.html#wavestate.is_finite', 'cjm_water_wave_lab/dtn/state.py'),
                'cjm_water_wave_lab.dtn.state.DtnResult': ('dtn/state.html#dtnresult', 'cjm_water_wave_lab/dtn/state.py'),
            },
            'cjm_water_wave_lab.evolution.initial': {
                'cjm_water_wave_lab.evolution.initial.SpectralEnvelope': ('evolution/initial.html#spectralenvelope', 'cjm_water_wave_lab/evolution/initial.py'),
                'cjm_water_wave_lab.evolution.initial.SpectralEnvelope.__call__': ('evolution/initial.html#spectralenvelope.__call__', 'cjm_water_wave_lab/evolution/initial.py'),
                'cjm_water_wave_lab.evolution.initial.SpectralEnvelope.check': ('evolution/initial.html#spectralenvelope.check', 'cjm_water_wave_lab/evolution/initial.py'),
                'cjm_water_wave_lab.evolution.initial.random_phase_field': ('evolution/initial.html#random_phase_field', 'cjm_water_wave_lab/evolution/initial.py'),
                'cjm_water_wave_lab.evolution.initial.random_state': ('evolution/initial.html#random_state', 'cjm_water_wave_lab/evolution/initial.py'),
                'cjm_water_wave_lab.evolution.initial.make_initial_data': ('evolution/initial.html#make_initial_data', 'cjm_water_wave_lab/evolution/initial.py'),
            },
            'cjm_water_wave_lab.evolution.integrator': {
                'cjm_water_wave_lab.evolution.integrator.IntegratorSettings': ('evolution/integrator.html#integratorsettings', 'cjm_water_wave_lab/evolution/integrator.py'),
                'cjm_water_wave_lab.evolution.integrator.default_dt': ('evolution/integrator.html#default_dt', 'cjm_water_wave_lab/evolution/integrator.py'),
                'cjm_water_wave_lab.evolution.integrator.rhs': ('evolution/integrator.html#rhs', 'cjm_water_wave_lab/evolution/integrator.py'),
                'cjm_water_wave_lab.evolution.integrator.nonlinearity': ('evolution/integrator.html#nonlinearity', 'cjm_water_wave_lab/evolution/integrator.py'),
                'cjm_water_wave_lab.evolution.integrator.step': ('evolution/integrator.html#step', 'cjm_water_wave_lab/evolution/integrator.py'),
                'cjm_water_wave_lab.evolution.integrator._checked': ('evolution/integrator.html#_checked', 'cjm_water_wave_lab/evolution/integrator.py'),
            },
            'cjm_water_wave_lab.evolution.simulate': {
                'cjm_water_wave_lab.evolution.simulate.Trajectory': ('evolution/simulate.html#trajectory', 'cjm_water_wave_lab/evolution/simulate.py'),
                'cjm_water_wave_lab.evolution.simulate.Trajectory.times': ('evolution/simulate.html#trajectory.times', 'cjm_water_wave_lab/evolution/simulate.py'),
                'cjm_water_wave_lab.evolution.simulate.Trajectory.final': ('evolution/simulate.html#trajectory.final', 'cjm_water_wave_lab/evolution/simulate.py'),
                'cjm_water_wave_lab.evolution.simulate._snapshot_steps': ('evolution/simulate.html#_snapshot_steps', 'cjm_water_wave_lab/evolution/simulate.py'),
                'cjm_water_wave_lab.evolution.simulate.simulate': ('evolution/simulate.html#simulate', 'cjm_water_wave_lab/evolution/simulate.py'),
            },
            'cjm_water_wave_lab.experiments.cli': {
                'cjm_water_wave_lab.experiments.cli.configure_logging': ('experiments/cli.html#configure_logging', 'cjm_water_wave_lab/experiments/cli.py'),
                'cjm_water_wave_lab.experiments.cli.run_command': ('experiments/cli.html#run_command', 'cjm_water_wave_lab/experiments/cli.py'),
                'cjm_water_wave_lab.experiments.cli.main': ('experiments/cli.html#main', 'cjm_water_wave_lab/experiments/cli.py'),
            },
            'cjm_water_wave_lab.experiments.sweeps': {
                'cjm_water_wave_lab.experiments.sweeps.diagnostics_settings': ('experiments/sweeps.html#diagnostics_settings', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.integrator_settings': ('experiments/sweeps.html#integrator_settings', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.modes_for_period': ('experiments/sweeps.html#modes_for_period', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.run_member': ('experiments/sweeps.html#run_member', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps._run_all': ('experiments/sweeps.html#_run_all', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.lifespan_regime': ('experiments/sweeps.html#lifespan_regime', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.ExperimentResult': ('experiments/sweeps.html#experimentresult', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps._record_name': ('experiments/sweeps.html#_record_name', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps._write_runs': ('experiments/sweeps.html#_write_runs', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.run_simulate': ('experiments/sweeps.html#run_simulate', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.SweepRow': ('experiments/sweeps.html#sweeprow', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps._sweep_rows': ('experiments/sweeps.html#_sweep_rows', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.lifespan_fit': ('experiments/sweeps.html#lifespan_fit', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps._write_sweep': ('experiments/sweeps.html#_write_sweep', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.run_sweep_epsilon': ('experiments/sweeps.html#run_sweep_epsilon', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.run_sweep_period': ('experiments/sweeps.html#run_sweep_period', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps._report': ('experiments/sweeps.html#_report', 'cjm_water_wave_lab/experiments/sweeps.py'),
                'cjm_water_wave_lab.experiments.sweeps.run_strichartz': ('experiments/sweeps.html#run_strichartz', 'cjm_water_wave_lab/experiments/sweeps.py'),
            },
            'cjm_water_wave_lab.experiments.validate': {
                'cjm_water_wave_lab.experiments.validate.CheckResult': ('experiments/validate.html#checkresult', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.CheckResult.ok': ('experiments/validate.html#checkresult.ok', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.ValidationReport': ('experiments/validate.html#validationreport', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.ValidationReport.failing': ('experiments/validate.html#validationreport.failing', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.ValidationReport.exit_code': ('experiments/validate.html#validationreport.exit_code', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.register_check': ('experiments/validate.html#register_check', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate._grid': ('experiments/validate.html#_grid', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate._envelope': ('experiments/validate.html#_envelope', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate._rng': ('experiments/validate.html#_rng', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate._small_states': ('experiments/validate.html#_small_states', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate._loglog_slope': ('experiments/validate.html#_loglog_slope', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_transform_roundtrip': ('experiments/validate.html#check_transform_roundtrip', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_lp_partition': ('experiments/validate.html#check_lp_partition', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_parseval': ('experiments/validate.html#check_parseval', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_paraproduct_bound': ('experiments/validate.html#check_paraproduct_bound', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_split_identity': ('experiments/validate.html#check_split_identity', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_cross_formulation': ('experiments/validate.html#check_cross_formulation', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_dtn_oracle': ('experiments/validate.html#check_dtn_oracle', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_amplitude_scaling': ('experiments/validate.html#check_amplitude_scaling', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_normal_form_reconstruction': ('experiments/validate.html#check_normal_form_reconstruction', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_ibp_convergence': ('experiments/validate.html#check_ibp_convergence', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_energy_conservation': ('experiments/validate.html#check_energy_conservation', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_time_reversal': ('experiments/validate.html#check_time_reversal', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_dispersive_decay': ('experiments/validate.html#check_dispersive_decay', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_strichartz_frequency': ('experiments/validate.html#check_strichartz_frequency', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_periodic_loss': ('experiments/validate.html#check_periodic_loss', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_wrap_time': ('experiments/validate.html#check_wrap_time', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_quartic_drift': ('experiments/validate.html#check_quartic_drift', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.check_inequality_bench': ('experiments/validate.html#check_inequality_bench', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.run_check': ('experiments/validate.html#run_check', 'cjm_water_wave_lab/experiments/validate.py'),
                'cjm_water_wave_lab.experiments.validate.run_validate': ('experiments/validate.html#run_validate', 'cjm_water_wave_lab/experiments/validate.py'),
            },
            'cjm_water_wave_lab.normal_form.bilinear': {
                'cjm_water_wave_lab.normal_form.bilinear.bilinear_apply': ('normal_form/bilinear.html#bilinear_apply', 'cjm_water_wave_lab/normal_form/bilinear.py'),
            },
            'cjm_water_wave_lab.normal_form.ibp': {
                'cjm_water_wave_lab.normal_form.ibp._signed': ('normal_form/ibp.html#_signed', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp._sum_pairs': ('normal_form/ibp.html#_sum_pairs', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.reconstruct_quadratic': ('normal_form/ibp.html#reconstruct_quadratic', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.boundary_term': ('normal_form/ibp.html#boundary_term', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.cubic_term': ('normal_form/ibp.html#cubic_term', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.IbpTerms': ('normal_form/ibp.html#ibpterms', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.IbpTerms.rhs': ('normal_form/ibp.html#ibpterms.rhs', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.IbpTerms.residual': ('normal_form/ibp.html#ibpterms.residual', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp._duhamel': ('normal_form/ibp.html#_duhamel', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp._samples': ('normal_form/ibp.html#_samples', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.ibp_terms': ('normal_form/ibp.html#ibp_terms', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp._states': ('normal_form/ibp.html#_states', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.ibp_identity_residual': ('normal_form/ibp.html#ibp_identity_residual', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.IbpConvergence': ('normal_form/ibp.html#ibpconvergence', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.IbpConvergence.passes': ('normal_form/ibp.html#ibpconvergence.passes', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.ibp_convergence': ('normal_form/ibp.html#ibp_convergence', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.DuhamelSplit': ('normal_form/ibp.html#duhamelsplit', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.duhamel_split': ('normal_form/ibp.html#duhamel_split', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp._bound_member': ('normal_form/ibp.html#_bound_member', 'cjm_water_wave_lab/normal_form/ibp.py'),
                'cjm_water_wave_lab.normal_form.ibp.boundary_term_bounds': ('normal_form/ibp.html#boundary_term_bounds', 'cjm_water_wave_lab/normal_form/ibp.py'),
            },
            'cjm_water_wave_lab.normal_form.split': {
                'cjm_water_wave_lab.normal_form.split.relative_l2': ('normal_form/split.html#relative_l2', 'cjm_water_wave_lab/normal_form/split.py'),
                'cjm_water_wave_lab.normal_form.split._complex': ('normal_form/split.html#_complex', 'cjm_water_wave_lab/normal_form/split.py'),
                'cjm_water_wave_lab.normal_form.split.NonlinearitySplit': ('normal_form/split.html#nonlinearitysplit', 'cjm_water_wave_lab/normal_form/split.py'),
                'cjm_water_wave_lab.normal_form.split.NonlinearitySplit.identity_residual': ('normal_form/split.html#nonlinearitysplit.identity_residual', 'cjm_water_wave_lab/normal_form/split.py'),
                'cjm_water_wave_lab.normal_form.split.split_nonlinearity': ('normal_form/split.html#split_nonlinearity', 'cjm_water_wave_lab/normal_form/split.py'),
                'cjm_water_wave_lab.normal_form.split.cross_formulation_residual': ('normal_form/split.html#cross_formulation_residual', 'cjm_water_wave_lab/normal_form/split.py'),
            },
            'cjm_water_wave_lab.normal_form.symbols': {
                'cjm_water_wave_lab.normal_form.symbols._check_signs': ('normal_form/symbols.html#_check_signs', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols.phase': ('normal_form/symbols.html#phase', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols._resonant': ('normal_form/symbols.html#_resonant', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols.quadratic_generators': ('normal_form/symbols.html#quadratic_generators', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols._unsymmetrized': ('normal_form/symbols.html#_unsymmetrized', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols.quadratic_symbol': ('normal_form/symbols.html#quadratic_symbol', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols.BilinearKernel': ('normal_form/symbols.html#bilinearkernel', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols.BilinearKernel.__post_init__': ('normal_form/symbols.html#bilinearkernel.__post_init__', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols.BilinearKernel.__call__': ('normal_form/symbols.html#bilinearkernel.__call__', 'cjm_water_wave_lab/normal_form/symbols.py'),
                'cjm_water_wave_lab.normal_form.symbols.BilinearKernel.matrix': ('normal_form/symbols.html#bilinearkernel.matrix', 'cjm_water_wave_lab/normal_form/symbols.py'),
            },
            'cjm_water_wave_lab.spectral.convolution': {
                'cjm_water_wave_lab.spectral.convolution._pair_layout': ('spectral/convolution.html#_pair_layout', 'cjm_water_wave_lab/spectral/convolution.py'),
                'cjm_water_wave_lab.spectral.convolution.pair_wavenumbers': ('spectral/convolution.html#pair_wavenumbers', 'cjm_water_wave_lab/spectral/convolution.py'),
                'cjm_water_wave_lab.spectral.convolution.pair_convolve': ('spectral/convolution.html#pair_convolve', 'cjm_water_wave_lab/spectral/convolution.py'),
            },
            'cjm_water_wave_lab.spectral.grid': {
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid': ('spectral/grid.html#periodicgrid', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.__post_init__': ('spectral/grid.html#periodicgrid.__post_init__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.dx': ('spectral/grid.html#periodicgrid.dx', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.indices': ('spectral/grid.html#periodicgrid.indices', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.wavenumbers': ('spectral/grid.html#periodicgrid.wavenumbers', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.points': ('spectral/grid.html#periodicgrid.points', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.mirror': ('spectral/grid.html#periodicgrid.mirror', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.nyquist': ('spectral/grid.html#periodicgrid.nyquist', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.xi_max': ('spectral/grid.html#periodicgrid.xi_max', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.PeriodicGrid.dealias_mask': ('spectral/grid.html#periodicgrid.dealias_mask', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid._hermitian_part': ('spectral/grid.html#_hermitian_part', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field': ('spectral/grid.html#field', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__post_init__': ('spectral/grid.html#field.__post_init__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.from_values': ('spectral/grid.html#field.from_values', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.zeros': ('spectral/grid.html#field.zeros', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.values': ('spectral/grid.html#field.values', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.mean': ('spectral/grid.html#field.mean', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field._check_grid': ('spectral/grid.html#field._check_grid', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__add__': ('spectral/grid.html#field.__add__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__neg__': ('spectral/grid.html#field.__neg__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__sub__': ('spectral/grid.html#field.__sub__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__rsub__': ('spectral/grid.html#field.__rsub__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__mul__': ('spectral/grid.html#field.__mul__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__truediv__': ('spectral/grid.html#field.__truediv__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__pow__': ('spectral/grid.html#field.__pow__', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.conj': ('spectral/grid.html#field.conj', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.real': ('spectral/grid.html#field.real', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.imag': ('spectral/grid.html#field.imag', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.roll': ('spectral/grid.html#field.roll', 'cjm_water_wave_lab/spectral/grid.py'),
                'cjm_water_wave_lab.spectral.grid.Field.__repr__': ('spectral/grid.html#field.__repr__', 'cjm_water_wave_lab/spectral/grid.py'),
            },
            'cjm_water_wave_lab.spectral.littlewood_paley': {
                'cjm_water_wave_lab.spectral.littlewood_paley.smooth_step': ('spectral/littlewood_paley.html#smooth_step', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.bump': ('spectral/littlewood_paley.html#bump', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.LPDecomposition': ('spectral/littlewood_paley.html#lpdecomposition', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.LPDecomposition.__post_init__': ('spectral/littlewood_paley.html#lpdecomposition.__post_init__', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.LPDecomposition.for_grid': ('spectral/littlewood_paley.html#lpdecomposition.for_grid', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.LPDecomposition.blocks': ('spectral/littlewood_paley.html#lpdecomposition.blocks', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.LPDecomposition.block_symbol': ('spectral/littlewood_paley.html#lpdecomposition.block_symbol', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.LPDecomposition.low_symbol': ('spectral/littlewood_paley.html#lpdecomposition.low_symbol', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.LPDecomposition.symbol': ('spectral/littlewood_paley.html#lpdecomposition.symbol', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.lp_project': ('spectral/littlewood_paley.html#lp_project', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.sup_norm': ('spectral/littlewood_paley.html#sup_norm', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.besov_norm': ('spectral/littlewood_paley.html#besov_norm', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
                'cjm_water_wave_lab.spectral.littlewood_paley.sobolev_norm': ('spectral/littlewood_paley.html#sobolev_norm', 'cjm_water_wave_lab/spectral/littlewood_paley.py'),
            },
            'cjm_water_wave_lab.spectral.multipliers': {
                'cjm_water_wave_lab.spectral.multipliers.symbol_values': ('spectral/multipliers.html#symbol_values', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers._keeps_real': ('spectral/multipliers.html#_keeps_real', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.apply_multiplier': ('spectral/multipliers.html#apply_multiplier', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.dealias': ('spectral/multipliers.html#dealias', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.product': ('spectral/multipliers.html#product', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.abs_grad': ('spectral/multipliers.html#abs_grad', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.half_grad': ('spectral/multipliers.html#half_grad', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.inv_half_grad': ('spectral/multipliers.html#inv_half_grad', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.ddx': ('spectral/multipliers.html#ddx', 'cjm_water_wave_lab/spectral/multipliers.py'),
                'cjm_water_wave_lab.spectral.multipliers.free_propagator': ('spectral/multipliers.html#free_propagator', 'cjm_water_wave_lab/spectral/multipliers.py'),
            },
            'cjm_water_wave_lab.spectral.paraproduct': {
                'cjm_water_wave_lab.spectral.paraproduct.ParaproductCutoff': ('spectral/paraproduct.html#paraproductcutoff', 'cjm_water_wave_lab/spectral/paraproduct.py'),
                'cjm_water_wave_lab.spectral.paraproduct.ParaproductCutoff.__post_init__': ('spectral/paraproduct.html#paraproductcutoff.__post_init__', 'cjm_water_wave_lab/spectral/paraproduct.py'),
                'cjm_water_wave_lab.spectral.paraproduct.ParaproductCutoff.chi': ('spectral/paraproduct.html#paraproductcutoff.chi', 'cjm_water_wave_lab/spectral/paraproduct.py'),
                'cjm_water_wave_lab.spectral.paraproduct.ParaproductCutoff.__call__': ('spectral/paraproduct.html#paraproductcutoff.__call__', 'cjm_water_wave_lab/spectral/paraproduct.py'),
                'cjm_water_wave_lab.spectral.paraproduct.ParaproductCutoff.matrix': ('spectral/paraproduct.html#paraproductcutoff.matrix', 'cjm_water_wave_lab/spectral/paraproduct.py'),
                'cjm_water_wave_lab.spectral.paraproduct.paraproduct': ('spectral/paraproduct.html#paraproduct', 'cjm_water_wave_lab/spectral/paraproduct.py'),
            },
            'cjm_water_wave_lab.strichartz.lab': {
                'cjm_water_wave_lab.strichartz.lab.free_evolve': ('strichartz/lab.html#free_evolve', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.grid_for_block': ('strichartz/lab.html#grid_for_block', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab._flat_symbol': ('strichartz/lab.html#_flat_symbol', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.block_packet': ('strichartz/lab.html#block_packet', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.DecayFit': ('strichartz/lab.html#decayfit', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab._check_window': ('strichartz/lab.html#_check_window', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab._sup_series': ('strichartz/lab.html#_sup_series', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.measure_decay': ('strichartz/lab.html#measure_decay', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.StrichartzMeasurement': ('strichartz/lab.html#strichartzmeasurement', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab._time_samples': ('strichartz/lab.html#_time_samples', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.measure_strichartz': ('strichartz/lab.html#measure_strichartz', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.LossFit': ('strichartz/lab.html#lossfit', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.measure_periodic_loss': ('strichartz/lab.html#measure_periodic_loss', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.WrapMeasurement': ('strichartz/lab.html#wrapmeasurement', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.WrapMeasurement.relative_error': ('strichartz/lab.html#wrapmeasurement.relative_error', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab._centroid': ('strichartz/lab.html#_centroid', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.wrap_time': ('strichartz/lab.html#wrap_time', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.periodic_loss_factor': ('strichartz/lab.html#periodic_loss_factor', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.DispersionReport': ('strichartz/lab.html#dispersionreport', 'cjm_water_wave_lab/strichartz/lab.py'),
                'cjm_water_wave_lab.strichartz.lab.dispersion_report': ('strichartz/lab.html#dispersion_report', 'cjm_water_wave_lab/strichartz/lab.py'),
            }}}
