"""LangGraph replay pipeline

The replay runs as a small graph: build the run state, gate on primality
(R1), then either run the check groups R2..R9 or mark them skipped, and
assemble the report. The async variant runs the independent groups
concurrently in worker threads; records are sorted by name on assembly, so
both variants produce the same report.
"""

import asyncio
import logging
from typing import Any, Dict, Mapping, Optional, Union

from langchain_core.runnables import RunnableLambda
from langgraph.graph import END, StateGraph

from krw.checks import GROUP_CHECK_NAMES, GROUPS, check_primality, run_group
from krw.models import ReplayConfig, VerificationReport
from krw.report_store import CheckStore

logger = logging.getLogger(__name__)

# Plain dict state, nodes return the full updated state
ReplayState = Dict[str, Any]

SKIP_REASON = "skipped: R1 primality gate failed"


class ReplayPipeline:
    """Compiled sync and async replay graphs"""

    def __init__(self):
        self.graph = self._build_graph(async_mode=False)
        self.graph_async = self._build_graph(async_mode=True)

    def _build_graph(self, async_mode: bool = False):
        """Build and compile the replay graph

        Returns:
            Compiled StateGraph ready for execution
        """
        workflow = StateGraph(ReplayState)

        workflow.add_node("build_context", RunnableLambda(self._build_context_node))
        workflow.add_node("primality", RunnableLambda(self._primality_node))
        if async_mode:
            workflow.add_node("run_checks", RunnableLambda(self._run_checks_node_async))
        else:
            workflow.add_node("run_checks", RunnableLambda(self._run_checks_node))
        workflow.add_node("skip_remaining", RunnableLambda(self._skip_remaining_node))
        workflow.add_node("assemble", RunnableLambda(self._assemble_node))

        workflow.set_entry_point("build_context")
        workflow.add_edge("build_context", "primality")
        workflow.add_conditional_edges(
            "primality",
            lambda state: state["context"] is not None,
            {
                True: "run_checks",
                False: "skip_remaining",
            },
        )
        workflow.add_edge("run_checks", "assemble")
        workflow.add_edge("skip_remaining", "assemble")
        workflow.add_edge("assemble", END)

        return workflow.compile()

    def _build_context_node(self, state: ReplayState) -> ReplayState:
        config: ReplayConfig = state["config"]
        state["store"] = CheckStore()
        state["config_echo"] = config.model_dump(mode="json")
        logger.info(f"Replay with seed {config.rng_seed}, {config.sample_count} samples")
        return state

    def _primality_node(self, state: ReplayState) -> ReplayState:
        records, context = check_primality(state["config"])
        state["store"].extend(records)
        state["context"] = context
        return state

    def _run_checks_node(self, state: ReplayState) -> ReplayState:
        for group in GROUPS:
            state["store"].extend(run_group(group, state["context"]))
        return state

    async def _run_checks_node_async(self, state: ReplayState) -> ReplayState:
        context = state["context"]
        results = await asyncio.gather(*(asyncio.to_thread(run_group, group, context) for group in GROUPS))
        for records in results:
            state["store"].extend(records)
        return state

    def _skip_remaining_node(self, state: ReplayState) -> ReplayState:
        logger.warning("Primality gate failed, skipping remaining checks")
        for group in GROUPS:
            state["store"].skip(GROUP_CHECK_NAMES[group], SKIP_REASON)
        return state

    def _assemble_node(self, state: ReplayState) -> ReplayState:
        state["report"] = state["store"].build_report(state["config_echo"])
        return state

    def run(self, config: ReplayConfig) -> VerificationReport:
        final_state = self.graph.invoke({"config": config, "context": None})
        return final_state["report"]

    async def arun(self, config: ReplayConfig) -> VerificationReport:
        final_state = await self.graph_async.ainvoke({"config": config, "context": None})
        return final_state["report"]


_pipeline: Optional[ReplayPipeline] = None


def get_pipeline() -> ReplayPipeline:
    """Factory function to get the shared compiled pipeline"""
    global _pipeline
    if _pipeline is None:
        _pipeline = ReplayPipeline()
    return _pipeline


def _as_config(cfg: Union[ReplayConfig, Mapping[str, Any]]) -> ReplayConfig:
    return cfg if isinstance(cfg, ReplayConfig) else ReplayConfig.load(None, cfg)


def replay_all(cfg: Union[ReplayConfig, Mapping[str, Any]]) -> VerificationReport:
    """Run every check and return the report

    Args:
        cfg: Validated config, or a mapping of ReplayConfig fields

    Raises:
        ConfigInvalidError: the config is invalid
    """
    return get_pipeline().run(_as_config(cfg))


async def replay_all_async(cfg: Union[ReplayConfig, Mapping[str, Any]]) -> VerificationReport:
    """Async replay_all with the check groups running concurrently"""
    return await get_pipeline().arun(_as_config(cfg))
