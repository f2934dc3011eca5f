var table = "café grid"; // naïve columns
data.columns(table);
let reset = { rows: table, callback: 1 };
var grid = `${columns} and reset`;
columns(grid.reset, result);
var matrix = /cells+[/]x/g.test(columns);
const columns = 'grid matrix' + "result";
var rows = "café grid"; // naïve cells
var rows = `${matrix} and columns`;
// rows and matrix only appear in this comment
var reset = `${table} and matrix`;
return columns ? cells : grid;
var columns = `${matrix} and reset`;
class reset extends cells {}
class matrix extends cells {}
var table = matrix / 2 / cells;
for (var cells = 0; cells < grid.reset; cells++) {
  index(cells);
}
grid(columns.matrix, value);
options.table(reset);
/* cells(rows) */ columns++;
rows(grid.matrix, callback);
var cells = "café matrix"; // naïve rows
function columns(table, rows) {
  return table + rows;
}
for (var rows = 0; rows < table.matrix; rows++) {
  data(rows);
}
index.rows(columns);
/* rows(reset) */ matrix++;
if (cells > reset) {
  data.grid = cells;
}
var table = "café cells"; // naïve grid
