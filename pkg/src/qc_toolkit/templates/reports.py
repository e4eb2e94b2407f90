"""
Report templates for the q-congruence toolkit.
"""

import os
from typing import Any, Dict, Optional

from jinja2 import ChoiceLoader, DictLoader, Environment, FileSystemLoader, TemplateNotFound

from ..models.schemas import VerificationRun
from ..utils.config import config
from ..utils.logger import get_logger

SUMMARY_TEMPLATE = """\
# Verification run `{{ run.id[:8] }}`: {{ run.suite }}

Started {{ run.created_at.strftime('%Y-%m-%d %H:%M:%S') }}.
{% if run.config.order %}Order override: {{ run.config.order }}.{% endif %}
Primes: {{ run.config.primes | join(', ') }}; alpha up to {{ run.config.alpha_max }}.

| verdict | count |
|---|---|
{% for verdict, count in summary.items() %}
| {{ verdict }} | {{ count }} |
{% endfor %}

## Checks

| id | verdict | order | instances | ms |
|---|---|---|---|---|
{% for r in run.reports %}
| `{{ r.id }}`{% if r.conjectural %} (open){% endif %} | {{ r.verdict.value }} | {{ r.order }} | {{ r.instances }} | {{ r.millis }} |
{% endfor %}
{% if run.failures %}

## Failures
{% for r in run.failures %}

### `{{ r.id }}`

{{ r.description }}

Reference: {{ r.reference }}
{% if r.counterexample %}
First failure at index {{ r.counterexample.index }}{% if r.counterexample.exponent is not none %} (q^{{ r.counterexample.exponent }}){% endif %}: got {{ r.counterexample.value }}{% if r.counterexample.expected is not none %}, expected {{ r.counterexample.expected }}{% endif %}.
{% endif %}
{% for note in r.notes %}
- {{ note }}
{% endfor %}
{% endfor %}
{% endif %}

Exit code: {{ run.exit_code() }}
"""

BUILTIN_TEMPLATES = {'summary.md.j2': SUMMARY_TEMPLATE}


class ReportRenderer:
    """Markdown report rendering with Jinja2."""

    def __init__(self, template_path: Optional[str] = None):
        """
        Initialize the renderer.

        Args:
            template_path: Directory whose templates override the built-in ones
        """
        self.logger = get_logger(__name__)
        self.template_path = template_path or config.get('reports.template_path')

        loaders = []
        if self.template_path and os.path.isdir(self.template_path):
            loaders.append(FileSystemLoader(self.template_path))
            self.logger.info(f"Report templates from: {self.template_path}")
        loaders.append(DictLoader(BUILTIN_TEMPLATES))
        self.env = Environment(loader=ChoiceLoader(loaders), trim_blocks=True, lstrip_blocks=True)

    def render_template(self, template_name: str, **kwargs: Any) -> str:
        """
        Render a template, falling back to the built-in summary if it is missing.

        Args:
            template_name: Name of template file
            **kwargs: Template variables

        Returns:
            Rendered text
        """
        try:
            template = self.env.get_template(template_name)
        except TemplateNotFound:
            self.logger.warning(f"Template {template_name} not found, using built-in summary")
            template = self.env.from_string(SUMMARY_TEMPLATE)
        return template.render(**kwargs)

    def render_run(self, run: VerificationRun, template_name: str = 'summary.md.j2') -> str:
        context: Dict[str, Any] = {'run': run, 'summary': run.summary()}
        return self.render_template(template_name, **context)


report_renderer = ReportRenderer()
