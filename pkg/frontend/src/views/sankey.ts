/** Cohort characteristics Sankey: T stage, N stage, cluster combination,
 * acute tier, late tier. Node clicks select that node's patients; any view's
 * patient highlight paints the containing nodes and flows blue. */

import { highlightedPatients } from '../linking.js';
import type { SelectionStore } from '../state.js';
import { SELECTION_BLUE } from '../theme.js';
import type { RuleCluster, SankeyResponse } from '../types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const WIDTH = 460;
const HEIGHT = 330;
const TOP = 26;
const NODE_W = 14;
const GAP = 6;

export interface SankeyView {
  destroy(): void;
}

export function mountSankey(
  container: HTMLElement,
  data: SankeyResponse,
  clusters: RuleCluster[],
  store: SelectionStore,
): SankeyView {
  const axes = data.graph.axes;
  const total = axes[0].nodes.reduce((sum, n) => sum + n.count, 0);
  const axisX = (index: number) =>
    20 + (index * (WIDTH - 40 - NODE_W)) / Math.max(1, axes.length - 1);

  interface Placed {
    y0: number;
    y1: number;
  }

  const placements: Map<string, Placed>[] = axes.map((axis) => {
    const usable = HEIGHT - TOP - 16 - GAP * (axis.nodes.length - 1);
    const placed = new Map<string, Placed>();
    let y = TOP;
    for (const node of axis.nodes) {
      const h = Math.max(3, (node.count / total) * usable);
      placed.set(node.label, { y0: y, y1: y + h });
      y += h + GAP;
    }
    return placed;
  });

  const render = () => {
    container.replaceChildren();
    container.classList.add('sankey-view');
    const svg = document.createElementNS(SVG_NS, 'svg');
    svg.setAttribute('width', String(WIDTH));
    svg.setAttribute('height', String(HEIGHT));
    svg.setAttribute('viewBox', `0 0 ${WIDTH} ${HEIGHT}`);

    const highlight = highlightedPatients(store.current, clusters);
    const isLit = (patients: string[]) =>
      highlight.size > 0 && patients.some((pid) => highlight.has(pid));

    // Links first so nodes draw on top.
    const linkOffsets: Map<string, number>[] = axes.map(
      (axis) => new Map(axis.nodes.map((n) => [n.label, 0])),
    );
    const targetOffsets: Map<string, number>[] = axes.map(
      (axis) => new Map(axis.nodes.map((n) => [n.label, 0])),
    );
    for (const link of data.graph.links) {
      const source = placements[link.source_axis].get(link.source);
      const target = placements[link.source_axis + 1].get(link.target);
      if (!source || !target) continue;
      const sourceSpan = source.y1 - source.y0;
      const targetSpan = target.y1 - target.y0;
      const sourceNode = axes[link.source_axis].nodes.find((n) => n.label === link.source)!;
      const targetNode = axes[link.source_axis + 1].nodes.find((n) => n.label === link.target)!;
      const h0 = (link.count / sourceNode.count) * sourceSpan;
      const h1 = (link.count / targetNode.count) * targetSpan;
      const o0 = linkOffsets[link.source_axis].get(link.source)!;
      const o1 = targetOffsets[link.source_axis + 1].get(link.target)!;
      linkOffsets[link.source_axis].set(link.source, o0 + h0);
      targetOffsets[link.source_axis + 1].set(link.target, o1 + h1);

      const x0 = axisX(link.source_axis) + NODE_W;
      const x1 = axisX(link.source_axis + 1);
      const y0 = source.y0 + o0 + h0 / 2;
      const y1 = target.y0 + o1 + h1 / 2;
      const mid = (x0 + x1) / 2;
      const path = document.createElementNS(SVG_NS, 'path');
      path.setAttribute('d', `M ${x0} ${y0} C ${mid} ${y0}, ${mid} ${y1}, ${x1} ${y1}`);
      path.setAttribute('fill', 'none');
      path.setAttribute('stroke-width', String(Math.max(1.5, (h0 + h1) / 2)));
      path.setAttribute('class', 'sankey-link');
      path.dataset.source = link.source;
      path.dataset.target = link.target;
      path.dataset.sourceAxis = String(link.source_axis);
      if (isLit(link.patients)) {
        path.classList.add('highlighted');
        path.setAttribute('stroke', SELECTION_BLUE);
        path.setAttribute('stroke-opacity', '0.65');
      } else {
        path.setAttribute('stroke', '#cfcfcf');
        path.setAttribute('stroke-opacity', '0.5');
      }
      svg.appendChild(path);
    }

    axes.forEach((axis, axisIndex) => {
      const title = document.createElementNS(SVG_NS, 'text');
      title.setAttribute('x', String(axisX(axisIndex) + NODE_W / 2));
      title.setAttribute('y', '14');
      title.setAttribute('text-anchor', 'middle');
      title.setAttribute('class', 'axis-title');
      title.textContent = axis.name;
      svg.appendChild(title);

      for (const node of axis.nodes) {
        const placed = placements[axisIndex].get(node.label)!;
        const key = `${axis.name}:${node.label}`;
        const rect = document.createElementNS(SVG_NS, 'rect');
        rect.setAttribute('x', String(axisX(axisIndex)));
        rect.setAttribute('y', String(placed.y0));
        rect.setAttribute('width', String(NODE_W));
        rect.setAttribute('height', String(placed.y1 - placed.y0));
        rect.setAttribute('class', 'sankey-node');
        rect.dataset.axis = axis.name;
        rect.dataset.label = node.label;
        const selected = store.current.sankeyNodes.has(key);
        if (selected || isLit(node.patients)) {
          rect.classList.add('highlighted');
          rect.setAttribute('fill', SELECTION_BLUE);
        } else {
          rect.setAttribute('fill', '#8a8a8a');
        }
        rect.addEventListener('click', () => store.selectSankeyNode(key, node.patients));
        svg.appendChild(rect);

        const label = document.createElementNS(SVG_NS, 'text');
        label.setAttribute('x', String(axisX(axisIndex) + NODE_W + 3));
        label.setAttribute('y', String((placed.y0 + placed.y1) / 2 + 3));
        label.setAttribute('class', 'node-label');
        label.textContent = `${node.label} (${node.count})`;
        svg.appendChild(label);
      }
    });

    container.appendChild(svg);
  };

  const unsubscribe = store.subscribe(render);
  return {
    destroy() {
      unsubscribe();
      container.replaceChildren();
    },
  };
}
